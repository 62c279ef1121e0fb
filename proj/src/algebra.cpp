#include "algraph/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "mask_engine.hpp"

namespace algraph {

using detail::Mask;
using detail::MaskCloser;

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<Operation> operations)
    : FiniteAlgebra(std::move(name), size, {}, std::move(operations)) {}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<std::string> element_names,
                             std::vector<Operation> operations)
    : name_(std::move(name)),
      size_(size),
      element_names_(std::move(element_names)),
      operations_(std::move(operations)) {
  if (element_names_.empty()) {
    element_names_.reserve(size_ > 0 ? size_ : 0);
    for (int i = 0; i < size_; ++i) element_names_.push_back(std::to_string(i));
  }
  validate();
}

void FiniteAlgebra::validate() const {
  if (size_ < 1) throw InputError("algebra '" + name_ + "': size must be >= 1");
  if (static_cast<int>(element_names_.size()) != size_)
    throw InputError("algebra '" + name_ + "': expected " + std::to_string(size_) +
                     " element names, got " + std::to_string(element_names_.size()));
  std::unordered_set<std::string> seen_labels(element_names_.begin(), element_names_.end());
  if (static_cast<int>(seen_labels.size()) != size_)
    throw InputError("algebra '" + name_ + "': element names must be distinct");
  std::unordered_set<std::string> seen_ops;
  for (const Operation& op : operations_) {
    if (!seen_ops.insert(op.name).second)
      throw InputError("algebra '" + name_ + "': duplicate operation name '" + op.name + "'");
    if (op.arity < 0)
      throw InputError("operation '" + op.name + "': negative arity");
    long long expected = 1;
    for (int i = 0; i < op.arity; ++i) {
      expected *= size_;
      if (expected > (1LL << 30))
        throw ResourceError("operation '" + op.name + "': table size cap (2^30 entries) exceeded");
    }
    if (static_cast<long long>(op.table.size()) != expected)
      throw InputError("operation '" + op.name + "': table has " +
                       std::to_string(op.table.size()) + " entries, expected " +
                       std::to_string(expected));
    for (std::size_t i = 0; i < op.table.size(); ++i)
      if (op.table[i] < 0 || op.table[i] >= size_)
        throw InputError("operation '" + op.name + "': table[" + std::to_string(i) +
                         "] = " + std::to_string(op.table[i]) + " out of range");
  }
}

int FiniteAlgebra::eval(const Operation& op, std::span<const int> args) const {
  long long flat = 0;
  for (int a : args) flat = flat * size_ + a;
  return op.table[static_cast<std::size_t>(flat)];
}

const Operation& FiniteAlgebra::first_binary() const {
  for (const Operation& op : operations_)
    if (op.arity == 2) return op;
  throw InputError("algebra '" + name_ + "' has no binary operation");
}

// ---------------------------------------------------------------------------
// Closure (generic over any carrier size)

SubalgebraSet closure(const FiniteAlgebra& a, std::span<const int> seed) {
  const int n = a.size();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  for (int s : seed) {
    if (s < 0 || s >= n)
      throw InputError("closure: element index " + std::to_string(s) + " out of range");
    add(s);
  }
  for (const Operation& op : a.operations())
    if (op.arity == 0) add(op.table[0]);

  std::size_t processed = 0;
  std::vector<int> idx;
  while (processed < members.size()) {
    std::size_t old = members.size();
    for (const Operation& op : a.operations()) {
      if (op.arity == 0) continue;
      const int k = op.arity;
      idx.assign(k, 0);
      while (true) {
        bool fresh = false;
        for (int i = 0; i < k; ++i)
          if (idx[i] >= static_cast<int>(processed)) { fresh = true; break; }
        if (fresh) {
          long long flat = 0;
          for (int i = 0; i < k; ++i) flat = flat * n + members[idx[i]];
          add(op.table[static_cast<std::size_t>(flat)]);
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] + 1 == static_cast<int>(old)) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
      }
    }
    processed = old;
  }
  std::sort(members.begin(), members.end());
  return SubalgebraSet{std::move(members), std::nullopt};
}

SubalgebraSet closure(const FiniteAlgebra& a, const std::vector<int>& seed) {
  return closure(a, std::span<const int>(seed));
}

bool is_closed(const FiniteAlgebra& a, std::span<const int> members) {
  std::vector<char> in(a.size(), 0);
  for (int m : members) {
    if (m < 0 || m >= a.size()) return false;
    in[m] = 1;
  }
  for (const Operation& op : a.operations()) {
    const int k = op.arity;
    if (k == 0) {
      if (!in[op.table[0]]) return false;
      continue;
    }
    std::vector<int> idx(k, 0);
    if (members.empty()) continue;
    while (true) {
      long long flat = 0;
      for (int i = 0; i < k; ++i) flat = flat * a.size() + members[idx[i]];
      if (!in[op.table[static_cast<std::size_t>(flat)]]) return false;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] + 1 == static_cast<int>(members.size())) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
  }
  return true;
}

SubalgebraSet minimal_subalgebra(const FiniteAlgebra& a) {
  SubalgebraSet e = closure(a, std::span<const int>{});
  e.rank = 0;
  return e;
}

// ---------------------------------------------------------------------------
// Rank / lattice / generating sets

namespace {

int rank_of_mask(MaskCloser& closer, Mask target, const SearchBudget& budget) {
  if (closer.close(0) == target) return 0;
  auto res = detail::minimal_generating_sets(closer, target, budget.max_subset_size);
  if (res.sets.empty())
    throw ResourceError("rank search: no generating set within subset cap " +
                        std::to_string(budget.max_subset_size));
  return detail::popcount(res.sets.front());
}

// rank <= 1, i.e. the set is E(A) or a monogenic subalgebra; cheaper than a
// full rank search.
bool rank_at_most_one(MaskCloser& closer, Mask target) {
  if (closer.close(0) == target) return true;
  for (Mask rest = target; rest;) {
    int w = std::countr_zero(rest);
    rest &= rest - 1;
    if (closer.mono(w) == target) return true;
  }
  return false;
}

std::vector<Mask> lattice_masks(MaskCloser& closer, const SearchBudget& budget) {
  const FiniteAlgebra& a = closer.algebra();
  std::vector<Mask> items;
  std::unordered_set<Mask> seen;
  auto push = [&](Mask m) {
    if (seen.insert(m).second) {
      items.push_back(m);
      if (static_cast<int>(items.size()) > budget.max_lattice_size)
        throw ResourceError("subalgebra lattice cap " + std::to_string(budget.max_lattice_size) +
                            " exceeded");
    }
  };
  push(closer.close(0));
  for (int x = 0; x < a.size(); ++x) push(closer.mono(x));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(closer.close(items[i] | items[j]));
  std::sort(items.begin(), items.end(), [](Mask x, Mask y) {
    int px = detail::popcount(x), py = detail::popcount(y);
    if (px != py) return px < py;
    return detail::mask_to_vec(x) < detail::mask_to_vec(y);
  });
  return items;
}

}  // namespace

int rank_of(const FiniteAlgebra& a, const SubalgebraSet& b, const SearchBudget& budget) {
  if (!is_closed(a, b.members))
    throw InputError("rank_of: the given set is not closed in '" + a.name() + "'");
  MaskCloser closer(a);
  return rank_of_mask(closer, detail::vec_to_mask(b.members), budget);
}

std::vector<SubalgebraSet> subalgebra_lattice(const FiniteAlgebra& a, const SearchBudget& budget) {
  MaskCloser closer(a);
  std::vector<SubalgebraSet> out;
  for (Mask m : lattice_masks(closer, budget))
    out.push_back(SubalgebraSet{detail::mask_to_vec(m), std::nullopt});
  return out;
}

std::vector<std::vector<int>> generating_sets(const FiniteAlgebra& a, GeneratingMode mode,
                                              const SearchBudget& budget) {
  MaskCloser closer(a);
  auto res = detail::minimal_generating_sets(closer, closer.full(), budget.max_subset_size);
  if (res.sets.empty())
    throw ResourceError("generating-set search: no generating set within subset cap " +
                        std::to_string(budget.max_subset_size));
  if (mode == GeneratingMode::minimal && res.budget_hit)
    throw ResourceError("generating-set search: subset cap " +
                        std::to_string(budget.max_subset_size) +
                        " reached before minimal sets were exhausted");
  std::vector<std::vector<int>> out;
  const int min_size = detail::popcount(res.sets.front());
  for (Mask m : res.sets) {
    if (mode == GeneratingMode::minimum && detail::popcount(m) != min_size) continue;
    out.push_back(detail::mask_to_vec(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group signature

std::optional<GroupSignature> group_signature(const FiniteAlgebra& a) {
  const auto& ops = a.operations();
  const int n = a.size();
  for (int bi = 0; bi < static_cast<int>(ops.size()); ++bi) {
    if (ops[bi].arity != 2) continue;
    const auto& mul = ops[bi].table;
    auto at = [&](int x, int y) { return mul[static_cast<std::size_t>(x) * n + y]; };
    bool assoc = true;
    for (int x = 0; x < n && assoc; ++x)
      for (int y = 0; y < n && assoc; ++y)
        for (int z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) {
            assoc = false;
            break;
          }
    if (!assoc) continue;
    for (int ni = 0; ni < static_cast<int>(ops.size()); ++ni) {
      if (ops[ni].arity != 0) continue;
      const int e = ops[ni].table[0];
      bool ident = true;
      for (int x = 0; x < n; ++x)
        if (at(e, x) != x || at(x, e) != x) {
          ident = false;
          break;
        }
      if (!ident) continue;
      for (int ui = 0; ui < static_cast<int>(ops.size()); ++ui) {
        if (ops[ui].arity != 1) continue;
        bool inverse = true;
        for (int x = 0; x < n; ++x) {
          int ix = ops[ui].table[x];
          if (at(x, ix) != e || at(ix, x) != e) {
            inverse = false;
            break;
          }
        }
        if (inverse) return GroupSignature{bi, ui, ni};
      }
    }
  }
  return std::nullopt;
}

bool is_group(const FiniteAlgebra& a) { return group_signature(a).has_value(); }

// ---------------------------------------------------------------------------
// Properties

namespace {

bool is_prime_power(int m) {
  if (m < 1) return false;
  if (m == 1) return true;
  int p = 0;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // prime
  while (m % p == 0) m /= p;
  return m == 1;
}

std::string label_set(const FiniteAlgebra& a, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int x : detail::mask_to_vec(m)) {
    if (!first) out += ",";
    out += a.label(x);
    first = false;
  }
  return out + "}";
}

PropertyResult fail_with(const FiniteAlgebra&, std::string description, std::vector<int> elements,
                         std::vector<Mask> sets) {
  PropertyWitness w;
  w.description = std::move(description);
  w.elements = std::move(elements);
  for (Mask m : sets) w.sets.push_back(detail::mask_to_vec(m));
  return PropertyResult{false, std::move(w)};
}

PropertyResult check_monotonic(const FiniteAlgebra& a, MaskCloser& closer,
                               const SearchBudget& budget, bool rank1_only) {
  auto lattice = lattice_masks(closer, budget);
  const Mask e_mask = closer.close(0);
  std::unordered_map<Mask, int> rank_cache;
  auto rank_of_member = [&](Mask m) {
    auto it = rank_cache.find(m);
    if (it != rank_cache.end()) return it->second;
    int r = rank_of_mask(closer, m, budget);
    rank_cache.emplace(m, r);
    return r;
  };
  if (rank1_only) {
    // 1-monotonic: nontrivial subalgebras of monogenic subalgebras have rank 1.
    for (int z = 0; z < a.size(); ++z) {
      Mask mz = closer.mono(z);
      for (Mask b : lattice) {
        if ((b & ~mz) != 0 || b == e_mask || b == 0) continue;
        if (!rank_at_most_one(closer, b)) {
          int r = rank_of_member(b);
          return fail_with(a,
                           "subalgebra " + label_set(a, b) + " of <" + a.label(z) +
                               "> = " + label_set(a, mz) + " has rank " + std::to_string(r),
                           {z}, {b, mz});
        }
      }
    }
    return PropertyResult{true, std::nullopt};
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (i == j) continue;
      Mask b1 = lattice[i], b2 = lattice[j];
      if ((b1 & ~b2) != 0) continue;  // need b1 <= b2
      if (rank_of_member(b1) > rank_of_member(b2))
        return fail_with(a,
                         "r(" + label_set(a, b1) + ") = " + std::to_string(rank_of_member(b1)) +
                             " > r(" + label_set(a, b2) +
                             ") = " + std::to_string(rank_of_member(b2)),
                         {}, {b1, b2});
    }
  return PropertyResult{true, std::nullopt};
}

PropertyResult check_mo(const FiniteAlgebra& a, MaskCloser& closer) {
  for (int z = 0; z < a.size(); ++z) {
    Mask mz = closer.mono(z);
    std::vector<int> reps = detail::mask_to_vec(mz);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        Mask mi = closer.mono(reps[i]), mj = closer.mono(reps[j]);
        if ((mi & ~mj) != 0 && (mj & ~mi) != 0)
          return fail_with(a,
                           "<" + a.label(reps[i]) + "> = " + label_set(a, mi) + " and <" +
                               a.label(reps[j]) + "> = " + label_set(a, mj) +
                               " are incomparable inside <" + a.label(z) + ">",
                           {z, reps[i], reps[j]}, {mi, mj});
      }
  }
  return PropertyResult{true, std::nullopt};
}

PropertyResult check_eppo(const FiniteAlgebra& a, MaskCloser& closer) {
  if (!is_group(a))
    throw InputError("EPPO is a group property; '" + a.name() + "' fails the group check");
  for (int x = 0; x < a.size(); ++x) {
    int order = detail::popcount(closer.mono(x));
    if (!is_prime_power(order))
      return fail_with(a,
                       "element " + a.label(x) + " has order " + std::to_string(order) +
                           ", not a prime power",
                       {x}, {closer.mono(x)});
  }
  return PropertyResult{true, std::nullopt};
}

// Derivation of the whole carrier from a generating set, together with the
// homomorphism constraints grouped by the level at which they become
// checkable. Level 0 derives E(A); level d >= 1 follows the assignment of
// gens[d-1].
struct DerivationPlan {
  std::vector<int> gens;
  struct Step {
    int elem;
    int op;
    std::vector<int> args;
  };
  struct Check {
    int op;
    std::vector<int> args;
    int result;
  };
  std::vector<std::vector<Step>> steps;
  std::vector<std::vector<Check>> checks;
  std::vector<int> level_of;
};

DerivationPlan make_plan(const FiniteAlgebra& a, const std::vector<int>& gens) {
  const int n = a.size();
  DerivationPlan plan;
  plan.gens = gens;
  plan.steps.resize(gens.size() + 1);
  plan.checks.resize(gens.size() + 1);
  plan.level_of.assign(n, -1);

  std::vector<int> members;
  auto saturate = [&](int level) {
    std::size_t processed = 0;
    std::vector<int> idx;
    while (processed < members.size()) {
      std::size_t old = members.size();
      for (int oi = 0; oi < static_cast<int>(a.operations().size()); ++oi) {
        const Operation& op = a.operations()[oi];
        if (op.arity == 0) continue;
        const int k = op.arity;
        idx.assign(k, 0);
        if (old == 0) continue;
        while (true) {
          bool fresh = false;
          for (int i = 0; i < k; ++i)
            if (idx[i] >= static_cast<int>(processed)) { fresh = true; break; }
          if (fresh) {
            long long flat = 0;
            for (int i = 0; i < k; ++i) flat = flat * n + members[idx[i]];
            int r = op.table[static_cast<std::size_t>(flat)];
            if (plan.level_of[r] < 0) {
              plan.level_of[r] = level;
              std::vector<int> args(k);
              for (int i = 0; i < k; ++i) args[i] = members[idx[i]];
              plan.steps[level].push_back({r, oi, std::move(args)});
              members.push_back(r);
            }
          }
          int pos = k - 1;
          while (pos >= 0 && idx[pos] + 1 == static_cast<int>(old)) idx[pos--] = 0;
          if (pos < 0) break;
          ++idx[pos];
        }
      }
      processed = old;
    }
  };

  for (int oi = 0; oi < static_cast<int>(a.operations().size()); ++oi) {
    const Operation& op = a.operations()[oi];
    if (op.arity != 0) continue;
    int c = op.table[0];
    if (plan.level_of[c] < 0) {
      plan.level_of[c] = 0;
      plan.steps[0].push_back({c, oi, {}});
      members.push_back(c);
    }
  }
  saturate(0);
  for (std::size_t d = 0; d < gens.size(); ++d) {
    int g = gens[d];
    if (plan.level_of[g] < 0) {
      plan.level_of[g] = static_cast<int>(d) + 1;
      members.push_back(g);
    }
    saturate(static_cast<int>(d) + 1);
  }
  for (int x = 0; x < n; ++x)
    if (plan.level_of[x] < 0)
      throw InputError("internal: generating set does not derive element " + a.label(x));

  // Constraint tuples, attached to the level where all arguments are derived.
  for (int oi = 0; oi < static_cast<int>(a.operations().size()); ++oi) {
    const Operation& op = a.operations()[oi];
    const int k = op.arity;
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= n;
    std::vector<int> args(k);
    for (long long flat = 0; flat < count; ++flat) {
      long long c = flat;
      int level = 0;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(c % n);
        c /= n;
        level = std::max(level, plan.level_of[args[i]]);
      }
      plan.checks[level].push_back({oi, args, op.table[static_cast<std::size_t>(flat)]});
    }
  }
  return plan;
}

bool apply_level(const FiniteAlgebra& a, const DerivationPlan& plan, int level,
                 std::vector<int>& img, std::vector<int>& touched) {
  std::vector<int> mapped;
  for (const auto& step : plan.steps[level]) {
    mapped.clear();
    for (int arg : step.args) mapped.push_back(img[arg]);
    img[step.elem] = a.eval(a.operations()[step.op], mapped);
    touched.push_back(step.elem);
  }
  for (const auto& check : plan.checks[level]) {
    mapped.clear();
    for (int arg : check.args) mapped.push_back(img[arg]);
    if (a.eval(a.operations()[check.op], mapped) != img[check.result]) return false;
  }
  return true;
}

bool extend_basis_map(const FiniteAlgebra& a, const DerivationPlan& plan,
                      const std::vector<int>& images, std::vector<int>& out) {
  std::vector<int> img(a.size(), -1);
  std::vector<int> touched;
  if (!apply_level(a, plan, 0, img, touched)) return false;
  for (std::size_t d = 0; d < plan.gens.size(); ++d) {
    img[plan.gens[d]] = images[d];
    touched.clear();
    if (!apply_level(a, plan, static_cast<int>(d) + 1, img, touched)) return false;
  }
  out = img;
  return true;
}

PropertyResult check_independence_algebra(const FiniteAlgebra& a, MaskCloser& closer,
                                          const SearchBudget& budget) {
  // Exchange property of the closure operator, quantified over closed sets
  // (closure of S U {x} only depends on <S>).
  auto lattice = lattice_masks(closer, budget);
  for (Mask b : lattice) {
    for (int x = 0; x < a.size(); ++x) {
      if (detail::has(b, x)) continue;
      Mask bx = closer.close(b | detail::bit(x));
      for (int y : detail::mask_to_vec(bx & ~b)) {
        if (y == x) continue;
        if (!detail::has(closer.close(b | detail::bit(y)), x))
          return fail_with(a,
                           "exchange fails: " + a.label(y) + " in <S+" + a.label(x) +
                               ">\\<S> but " + a.label(x) + " not in <S+" + a.label(y) +
                               "> for S = " + label_set(a, b),
                           {x, y}, {b});
      }
    }
  }
  // Unique extension of maps from one fixed basis.
  auto res = detail::minimal_generating_sets(closer, closer.full(), budget.max_subset_size);
  if (res.sets.empty())
    throw ResourceError("independence check: no generating set within subset cap " +
                        std::to_string(budget.max_subset_size));
  std::vector<int> basis = detail::mask_to_vec(res.sets.front());
  const int r = static_cast<int>(basis.size());
  long long total = 1;
  for (int i = 0; i < r; ++i) {
    total *= a.size();
    if (total > budget.max_candidates)
      throw ResourceError("independence check: candidate cap " +
                          std::to_string(budget.max_candidates) + " exceeded");
  }
  DerivationPlan plan = make_plan(a, basis);
  std::vector<int> images(r, 0), extended;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = r - 1; i >= 0; --i) {
      images[i] = static_cast<int>(c % a.size());
      c /= a.size();
    }
    if (!extend_basis_map(a, plan, images, extended)) {
      std::string desc = "basis map {";
      for (int i = 0; i < r; ++i) {
        if (i) desc += ", ";
        desc += a.label(basis[i]) + " -> " + a.label(images[i]);
      }
      desc += "} has no endomorphism extension";
      std::vector<int> featured = basis;
      featured.insert(featured.end(), images.begin(), images.end());
      return fail_with(a, desc, featured, {detail::vec_to_mask(basis)});
    }
  }
  return PropertyResult{true, std::nullopt};
}

}  // namespace

PropertyResult check_property(const FiniteAlgebra& a, Property prop, const SearchBudget& budget) {
  MaskCloser closer(a);
  switch (prop) {
    case Property::monotonic:
      return check_monotonic(a, closer, budget, false);
    case Property::one_monotonic:
      return check_monotonic(a, closer, budget, true);
    case Property::mo:
      return check_mo(a, closer);
    case Property::eppo:
      return check_eppo(a, closer);
    case Property::independence_algebra:
      return check_independence_algebra(a, closer, budget);
  }
  throw InputError("unknown property");
}

// ---------------------------------------------------------------------------
// Endomorphisms

namespace {

void backtrack(const FiniteAlgebra& a, const DerivationPlan& plan, int level,
               std::vector<int>& img, std::vector<Endomorphism>& out) {
  if (level == static_cast<int>(plan.gens.size())) {
    out.push_back(Endomorphism{img});
    return;
  }
  const int g = plan.gens[level];
  for (int v = 0; v < a.size(); ++v) {
    img[g] = v;
    std::vector<int> touched;
    if (apply_level(a, plan, level + 1, img, touched)) backtrack(a, plan, level + 1, img, out);
    for (int t : touched) img[t] = -1;
    img[g] = -1;
  }
}

std::vector<Endomorphism> exhaustive_endomorphisms(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<Endomorphism> out;
  std::vector<int> img(n, 0);
  while (true) {
    if (is_endomorphism(a, Endomorphism{img})) out.push_back(Endomorphism{img});
    int pos = n - 1;
    while (pos >= 0 && img[pos] + 1 == n) img[pos--] = 0;
    if (pos < 0) break;
    ++img[pos];
  }
  return out;
}

}  // namespace

std::vector<Endomorphism> enumerate_endomorphisms(const FiniteAlgebra& a,
                                                  const SearchBudget& budget) {
  std::vector<int> gens;
  try {
    MaskCloser closer(a);
    auto res = detail::minimal_generating_sets(closer, closer.full(), budget.max_subset_size);
    if (res.sets.empty())
      throw ResourceError("endomorphism search: no generating set within subset cap " +
                          std::to_string(budget.max_subset_size));
    gens = detail::mask_to_vec(res.sets.front());
  } catch (const ResourceError&) {
    if (a.size() <= 6) return exhaustive_endomorphisms(a);
    throw;
  }
  long long total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total *= a.size();
    if (total > budget.max_candidates)
      throw ResourceError("endomorphism search: candidate cap " +
                          std::to_string(budget.max_candidates) + " exceeded");
  }
  DerivationPlan plan = make_plan(a, gens);
  std::vector<int> img(a.size(), -1);
  std::vector<int> touched;
  std::vector<Endomorphism> out;
  if (apply_level(a, plan, 0, img, touched)) backtrack(a, plan, 0, img, out);
  std::sort(out.begin(), out.end(),
            [](const Endomorphism& x, const Endomorphism& y) { return x.images < y.images; });
  return out;
}

bool is_endomorphism(const FiniteAlgebra& a, const Endomorphism& f) {
  const int n = a.size();
  if (static_cast<int>(f.images.size()) != n) return false;
  for (int v : f.images)
    if (v < 0 || v >= n) return false;
  std::vector<int> mapped;
  for (const Operation& op : a.operations()) {
    const int k = op.arity;
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= n;
    std::vector<int> args(k);
    for (long long flat = 0; flat < count; ++flat) {
      long long c = flat;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(c % n);
        c /= n;
      }
      mapped.clear();
      for (int x : args) mapped.push_back(f.images[x]);
      if (a.eval(op, mapped) != f.images[op.table[static_cast<std::size_t>(flat)]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// File format

namespace {

using nlohmann::json;

[[noreturn]] void bad_doc(const std::string& path, const std::string& what) {
  throw InputError("algebra document: " + path + ": " + what);
}

}  // namespace

FiniteAlgebra algebra_from_json_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("algebra document: not valid JSON");
  if (!doc.is_object()) bad_doc("$", "expected an object");
  if (!doc.contains("name") || !doc["name"].is_string()) bad_doc("$.name", "expected a string");
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    bad_doc("$.size", "expected an integer");
  const int n = doc["size"].get<int>();
  std::vector<std::string> names;
  if (doc.contains("elements")) {
    if (!doc["elements"].is_array()) bad_doc("$.elements", "expected an array");
    for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
      if (!doc["elements"][i].is_string())
        bad_doc("$.elements[" + std::to_string(i) + "]", "expected a string");
      names.push_back(doc["elements"][i].get<std::string>());
    }
  }
  if (!doc.contains("operations") || !doc["operations"].is_array())
    bad_doc("$.operations", "expected an array");
  std::vector<Operation> ops;
  for (std::size_t i = 0; i < doc["operations"].size(); ++i) {
    const std::string base = "$.operations[" + std::to_string(i) + "]";
    const json& o = doc["operations"][i];
    if (!o.is_object()) bad_doc(base, "expected an object");
    if (!o.contains("name") || !o["name"].is_string()) bad_doc(base + ".name", "expected a string");
    if (!o.contains("arity") || !o["arity"].is_number_integer())
      bad_doc(base + ".arity", "expected an integer");
    if (!o.contains("table") || !o["table"].is_array())
      bad_doc(base + ".table", "expected an array");
    Operation op;
    op.name = o["name"].get<std::string>();
    op.arity = o["arity"].get<int>();
    for (std::size_t j = 0; j < o["table"].size(); ++j) {
      if (!o["table"][j].is_number_integer())
        bad_doc(base + ".table[" + std::to_string(j) + "]", "expected an integer");
      op.table.push_back(o["table"][j].get<int>());
    }
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(doc["name"].get<std::string>(), n, std::move(names), std::move(ops));
}

FiniteAlgebra algebra_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return algebra_from_json_text(buf.str());
}

std::string algebra_to_json_text(const FiniteAlgebra& a) {
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["size"] = a.size();
  doc["elements"] = a.element_names();
  doc["operations"] = nlohmann::ordered_json::array();
  for (const Operation& op : a.operations()) {
    nlohmann::ordered_json o;
    o["name"] = op.name;
    o["arity"] = op.arity;
    o["table"] = op.table;
    doc["operations"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

}  // namespace algraph
