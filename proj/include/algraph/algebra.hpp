#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algraph/errors.hpp"

namespace algraph {

/// One named finitary operation given by a dense table, row-major with the
/// first argument most significant: f(a1,...,ak) = table[((a1*n+a2)*n+...)+ak].
/// Arity 0 stores its constant in a single-entry table.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;
};

/// A finite universal algebra: carrier {0,...,n-1} plus operation tables.
/// Immutable after construction; construction validates every invariant
/// (entries in range, table lengths n^arity, distinct operation names).
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, std::vector<Operation> operations);
  FiniteAlgebra(std::string name, int size, std::vector<std::string> element_names,
                std::vector<Operation> operations);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const std::vector<std::string>& element_names() const { return element_names_; }
  const std::string& label(int x) const { return element_names_.at(x); }
  const std::vector<Operation>& operations() const { return operations_; }

  int eval(const Operation& op, std::span<const int> args) const;
  /// Shorthand for the first binary operation (InputError if there is none).
  const Operation& first_binary() const;

 private:
  void validate() const;

  std::string name_;
  int size_;
  std::vector<std::string> element_names_;
  std::vector<Operation> operations_;
};

/// A closed subset of some algebra, optionally tagged with its rank.
struct SubalgebraSet {
  std::vector<int> members;  // sorted, closed under all parent operations
  std::optional<int> rank;   // minimum generating-set size, once computed
};

/// A self-map commuting with every operation of its algebra.
struct Endomorphism {
  std::vector<int> images;  // images[i] = image of element i
};

/// Search and size caps for the combinatorial kernels. Defaults are sized
/// for desk-scale instances; every overflow raises ResourceError naming
/// the cap that fired.
struct SearchBudget {
  int max_subset_size = 6;               // generating-set / rank subset cap
  int max_lattice_size = 4096;           // subalgebra lattice cap
  int max_simplex_size = 8;              // simplicial-complex simplex cap
  long long max_candidates = 1LL << 26;  // endomorphism backtracking cap
};

/// Least closed superset of seed (constants included); closure(∅) = E(A).
SubalgebraSet closure(const FiniteAlgebra& a, std::span<const int> seed);
SubalgebraSet closure(const FiniteAlgebra& a, const std::vector<int>& seed);

/// True iff members is closed under every operation of a.
bool is_closed(const FiniteAlgebra& a, std::span<const int> members);

/// E(A): the subalgebra generated by the constants (empty without nullaries).
SubalgebraSet minimal_subalgebra(const FiniteAlgebra& a);

/// Smallest k such that some k-subset of b.members generates it; E(A) -> 0.
int rank_of(const FiniteAlgebra& a, const SubalgebraSet& b, const SearchBudget& budget = {});

/// Every distinct closed subset of a, each exactly once, sorted by
/// (cardinality, members). Computed as the join-closure of the monogenic
/// subalgebras together with E(A).
std::vector<SubalgebraSet> subalgebra_lattice(const FiniteAlgebra& a,
                                              const SearchBudget& budget = {});

enum class GeneratingMode { minimal, minimum };

/// mode=minimum: all generating sets of cardinality r(A);
/// mode=minimal: all inclusion-minimal generating sets.
/// Sorted by (size, elements); sets are sorted element lists.
std::vector<std::vector<int>> generating_sets(const FiniteAlgebra& a, GeneratingMode mode,
                                              const SearchBudget& budget = {});

enum class Property { monotonic, one_monotonic, mo, eppo, independence_algebra };

struct PropertyWitness {
  std::string description;             // human-readable, uses element labels
  std::vector<int> elements;           // featured elements (property-specific)
  std::vector<std::vector<int>> sets;  // featured subsets (property-specific)
};

struct PropertyResult {
  bool holds = false;
  std::optional<PropertyWitness> witness;  // present when holds is false
};

/// Property checks of §2-style algebra conditions. EPPO requires the algebra
/// to pass group_signature() and raises InputError otherwise.
PropertyResult check_property(const FiniteAlgebra& a, Property prop,
                              const SearchBudget& budget = {});

/// Indices of (binary, unary, nullary) operations forming a group structure,
/// if the declared signature contains one (associativity, identity, inverses
/// are verified against the tables).
struct GroupSignature {
  int mul, inv, identity;  // operation indices
};
std::optional<GroupSignature> group_signature(const FiniteAlgebra& a);
bool is_group(const FiniteAlgebra& a);

/// All endomorphisms, each exactly once, sorted lexicographically by image
/// array. Backtracks over the images of a minimum generating set with
/// closure propagation; falls back to exhaustive map search when n <= 6.
std::vector<Endomorphism> enumerate_endomorphisms(const FiniteAlgebra& a,
                                                  const SearchBudget& budget = {});

bool is_endomorphism(const FiniteAlgebra& a, const Endomorphism& f);

/// Algebra file format: { "name": str, "size": n, "elements": [names]?,
/// "operations": [ { "name": str, "arity": k, "table": [n^k indices] } ] }.
/// Malformed documents raise InputError naming the offending path.
FiniteAlgebra algebra_from_json_text(const std::string& text);
FiniteAlgebra algebra_from_file(const std::string& path);
std::string algebra_to_json_text(const FiniteAlgebra& a);

}  // namespace algraph
