#pragma once

#include <string>
#include <vector>

#include "algraph/algebra.hpp"

namespace algraph {

// Builders for the standard families. Groups carry the signature
// (mul: binary, inv: unary, e: nullary); semigroups carry only mul;
// quasigroup_unary carries one unary right-multiplication per element.

FiniteAlgebra build_cyclic(int n);
FiniteAlgebra build_dihedral(int order);  // order = 2m
FiniteAlgebra build_symmetric(int n);     // n <= 5
FiniteAlgebra build_alternating(int n);   // n <= 5
FiniteAlgebra build_quaternion8();
FiniteAlgebra build_elementary_abelian(int p, int k);
FiniteAlgebra build_direct_product(const std::vector<FiniteAlgebra>& parts);
FiniteAlgebra build_monogenic_semigroup(int index, int period);  // x^(m+r) = x^m
FiniteAlgebra build_volkov_semigroup();

/// Unary algebra of right multiplications of a Latin square (InputError if
/// the table is not Latin). Labels default to "0".."n-1".
FiniteAlgebra build_quasigroup_unary(const std::string& name,
                                     const std::vector<std::vector<int>>& latin,
                                     std::vector<std::string> labels = {});

/// Same construction applied to the first binary operation of an algebra
/// whose table is Latin (e.g. a group).
FiniteAlgebra quasigroup_unary_of(const FiniteAlgebra& base);

/// Builder-string parser: cyclic:6, dihedral:8, symmetric:4, alternating:5,
/// quaternion8, elemab:2:3, product:cyclic:2,cyclic:2, monosg:4:1, volkov,
/// quasiunary:file:<path>, quasiunary:<spec>, file:<path>.
FiniteAlgebra build_from_spec(const std::string& spec);

/// Latin square file: JSON 2d array, or {"name": str, "table": [[...]]}.
std::vector<std::vector<int>> latin_square_from_file(const std::string& path,
                                                     std::string* name_out = nullptr);

}  // namespace algraph
