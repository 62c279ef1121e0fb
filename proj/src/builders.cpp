#include "algraph/builders.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace algraph {

namespace {

Operation binary_op(std::string name, int n, std::vector<int> table) {
  return Operation{std::move(name), 2, std::move(table)};
}

std::vector<Operation> group_ops(int n, const std::vector<int>& mul) {
  auto at = [&](int x, int y) { return mul[static_cast<std::size_t>(x) * n + y]; };
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ident = true;
    for (int x = 0; x < n; ++x)
      if (at(c, x) != x || at(x, c) != x) {
        ident = false;
        break;
      }
    if (ident) e = c;
  }
  if (e < 0) throw InputError("group builder: table has no identity");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (at(x, y) == e && at(y, x) == e) inv[x] = y;
  for (int x = 0; x < n; ++x)
    if (inv[x] < 0) throw InputError("group builder: element without inverse");
  return {binary_op("mul", n, mul), Operation{"inv", 1, std::move(inv)},
          Operation{"e", 0, {e}}};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool perm_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteAlgebra permutation_group(std::string name, std::vector<std::vector<int>> perms) {
  const int n = static_cast<int>(perms.size());
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    index[perms[i]] = i;
    std::string s;
    for (int v : perms[i]) s += std::to_string(v);
    labels.push_back(s);
  }
  const int deg = static_cast<int>(perms[0].size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> compose(deg);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < deg; ++x) compose[x] = perms[i][perms[j][x]];
      mul[static_cast<std::size_t>(i) * n + j] = index.at(compose);
    }
  return FiniteAlgebra(std::move(name), n, std::move(labels), group_ops(n, mul));
}

}  // namespace

FiniteAlgebra build_cyclic(int n) {
  if (n < 1) throw InputError("cyclic: order must be >= 1");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteAlgebra("C" + std::to_string(n), n, group_ops(n, mul));
}

FiniteAlgebra build_dihedral(int order) {
  if (order < 2 || order % 2 != 0) throw InputError("dihedral: order must be even and >= 2");
  const int m = order / 2, n = order;
  // index a*m + i encodes f^a r^i; r^i f = f r^(-i)
  auto enc = [&](int a, int i) { return a * m + ((i % m) + m) % m; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < m; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < m; ++j)
          mul[static_cast<std::size_t>(enc(a, i)) * n + enc(b, j)] =
              enc((a + b) % 2, (b ? -i : i) + j);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(i == 0 ? "e" : "r" + std::to_string(i));
  for (int i = 0; i < m; ++i) labels.push_back("f" + std::to_string(i));
  return FiniteAlgebra("D" + std::to_string(order), n, std::move(labels), group_ops(n, mul));
}

FiniteAlgebra build_symmetric(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric: supported degrees are 1..5");
  return permutation_group("S" + std::to_string(n), permutations_lex(n));
}

FiniteAlgebra build_alternating(int n) {
  if (n < 1 || n > 5) throw InputError("alternating: supported degrees are 1..5");
  std::vector<std::vector<int>> perms;
  for (auto& p : permutations_lex(n))
    if (perm_even(p)) perms.push_back(p);
  return permutation_group("A" + std::to_string(n), std::move(perms));
}

FiniteAlgebra build_quaternion8() {
  // index 2u+s: unit u in {e,i,j,k}, sign s (0 = +, 1 = -); ij=k, jk=i, ki=j
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const int n = 8;
  std::vector<int> mul(64);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      int u = unit_mul[ux][uy];
      int s = (sx + sy + unit_sgn[ux][uy]) % 2;
      mul[static_cast<std::size_t>(x) * n + y] = 2 * u + s;
    }
  std::vector<std::string> labels = {"e", "-e", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteAlgebra("Q8", n, std::move(labels), group_ops(n, mul));
}

FiniteAlgebra build_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw InputError("elementary_abelian: p must be prime");
  if (k < 1) throw InputError("elementary_abelian: k must be >= 1");
  std::vector<FiniteAlgebra> parts;
  for (int i = 0; i < k; ++i) parts.push_back(build_cyclic(p));
  FiniteAlgebra prod = build_direct_product(parts);
  return FiniteAlgebra("C" + std::to_string(p) + "^" + std::to_string(k), prod.size(),
                       prod.element_names(), prod.operations());
}

FiniteAlgebra build_direct_product(const std::vector<FiniteAlgebra>& parts) {
  if (parts.empty()) throw InputError("direct_product: needs at least one component");
  const auto& sig = parts[0].operations();
  for (const auto& part : parts) {
    if (part.operations().size() != sig.size())
      throw InputError("direct_product: components must share a signature");
    for (std::size_t i = 0; i < sig.size(); ++i)
      if (part.operations()[i].name != sig[i].name || part.operations()[i].arity != sig[i].arity)
        throw InputError("direct_product: components must share a signature");
  }
  long long total = 1;
  for (const auto& part : parts) {
    total *= part.size();
    if (total > 4096) throw ResourceError("direct_product: size cap 4096 exceeded");
  }
  const int n = static_cast<int>(total);
  const int parts_n = static_cast<int>(parts.size());
  // mixed radix, first component most significant
  auto decode = [&](int x, std::vector<int>& comps) {
    for (int i = parts_n - 1; i >= 0; --i) {
      comps[i] = x % parts[i].size();
      x /= parts[i].size();
    }
  };
  auto encode = [&](const std::vector<int>& comps) {
    int x = 0;
    for (int i = 0; i < parts_n; ++i) x = x * parts[i].size() + comps[i];
    return x;
  };
  std::vector<std::string> labels(n);
  std::vector<int> comps(parts_n);
  for (int x = 0; x < n; ++x) {
    decode(x, comps);
    std::string s = "(";
    for (int i = 0; i < parts_n; ++i) {
      if (i) s += ",";
      s += parts[i].label(comps[i]);
    }
    labels[x] = s + ")";
  }
  std::vector<Operation> ops;
  std::vector<std::vector<int>> arg_comps;
  for (std::size_t oi = 0; oi < sig.size(); ++oi) {
    const int k = sig[oi].arity;
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= n;
    Operation op{sig[oi].name, k, std::vector<int>(static_cast<std::size_t>(count))};
    std::vector<int> args(k), res(parts_n), part_args(k);
    arg_comps.assign(k, std::vector<int>(parts_n));
    for (long long flat = 0; flat < count; ++flat) {
      long long c = flat;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(c % n);
        c /= n;
        decode(args[i], arg_comps[i]);
      }
      for (int pi = 0; pi < parts_n; ++pi) {
        for (int i = 0; i < k; ++i) part_args[i] = arg_comps[i][pi];
        res[pi] = parts[pi].eval(parts[pi].operations()[oi], part_args);
      }
      op.table[static_cast<std::size_t>(flat)] = encode(res);
    }
    ops.push_back(std::move(op));
  }
  std::string name;
  for (int i = 0; i < parts_n; ++i) {
    if (i) name += "x";
    name += parts[i].name();
  }
  return FiniteAlgebra(std::move(name), n, std::move(labels), std::move(ops));
}

FiniteAlgebra build_monogenic_semigroup(int index, int period) {
  if (index < 1 || period < 1) throw InputError("monogenic_semigroup: index, period must be >= 1");
  const int n = index + period - 1;
  if (n > 64) throw ResourceError("monogenic_semigroup: size cap 64 exceeded");
  // element i represents x^(i+1); exponents above index wrap with the period
  auto reduce = [&](int exp) { return exp <= n ? exp : index + (exp - index) % period; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] = reduce(i + j + 2) - 1;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x^" + std::to_string(i + 1));
  return FiniteAlgebra("Mono(" + std::to_string(index) + "," + std::to_string(period) + ")", n,
                       std::move(labels), {binary_op("mul", n, std::move(mul))});
}

FiniteAlgebra build_volkov_semigroup() {
  // a,b,e with a*a=e, a*b=b, a*e=e, b*a=b, b*b=e, b*e=b, e*a=e, e*b=b, e*e=e
  std::vector<int> mul = {2, 1, 2, 1, 2, 1, 2, 1, 2};
  return FiniteAlgebra("Volkov", 3, {"a", "b", "e"}, {binary_op("mul", 3, std::move(mul))});
}

FiniteAlgebra build_quasigroup_unary(const std::string& name,
                                     const std::vector<std::vector<int>>& latin,
                                     std::vector<std::string> labels) {
  const int n = static_cast<int>(latin.size());
  if (n < 1) throw InputError("quasigroup_unary: empty table");
  for (const auto& row : latin)
    if (static_cast<int>(row.size()) != n) throw InputError("quasigroup_unary: table not square");
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      int r = latin[i][j], c = latin[j][i];
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw InputError("quasigroup_unary: entry out of range");
      if (row_seen[r]++ || col_seen[c]++)
        throw InputError("quasigroup_unary: table is not a Latin square");
    }
  }
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Operation> ops;
  for (int a = 0; a < n; ++a) {
    Operation op{"rho_" + labels[a], 1, std::vector<int>(n)};
    for (int x = 0; x < n; ++x) op.table[x] = latin[x][a];  // x -> x*a
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(name, n, std::move(labels), std::move(ops));
}

FiniteAlgebra quasigroup_unary_of(const FiniteAlgebra& base) {
  const Operation& mul = base.first_binary();
  const int n = base.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = mul.table[static_cast<std::size_t>(x) * n + y];
  return build_quasigroup_unary("Q1(" + base.name() + ")", table, base.element_names());
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("algebra spec: bad " + what + " '" + s + "'");
  }
}

}  // namespace

std::vector<std::vector<int>> latin_square_from_file(const std::string& path,
                                                     std::string* name_out) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Latin square file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw InputError("Latin square file: not valid JSON: " + path);
  const nlohmann::json* rows = &doc;
  if (doc.is_object()) {
    if (name_out && doc.contains("name") && doc["name"].is_string())
      *name_out = doc["name"].get<std::string>();
    if (!doc.contains("table")) throw InputError("Latin square file: missing $.table");
    rows = &doc["table"];
  }
  if (!rows->is_array()) throw InputError("Latin square file: expected an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw InputError("Latin square file: expected an array of rows");
    table.push_back(row.get<std::vector<int>>());
  }
  return table;
}

FiniteAlgebra build_from_spec(const std::string& spec) {
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  if (spec == "volkov") return build_volkov_semigroup();
  if (spec == "quaternion8" || spec == "q8") return build_quaternion8();
  if (starts("cyclic:")) return build_cyclic(parse_int(spec.substr(7), "order"));
  if (starts("dihedral:")) return build_dihedral(parse_int(spec.substr(9), "order"));
  if (starts("symmetric:")) return build_symmetric(parse_int(spec.substr(10), "degree"));
  if (starts("alternating:")) return build_alternating(parse_int(spec.substr(12), "degree"));
  if (starts("elemab:")) {
    std::string rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("algebra spec: elemab:<p>:<k>");
    return build_elementary_abelian(parse_int(rest.substr(0, colon), "prime"),
                                    parse_int(rest.substr(colon + 1), "exponent"));
  }
  if (starts("monosg:")) {
    std::string rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("algebra spec: monosg:<index>:<period>");
    return build_monogenic_semigroup(parse_int(rest.substr(0, colon), "index"),
                                     parse_int(rest.substr(colon + 1), "period"));
  }
  if (starts("product:")) {
    std::string rest = spec.substr(8);
    std::vector<FiniteAlgebra> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (item.empty()) throw InputError("algebra spec: empty product component");
      parts.push_back(build_from_spec(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return build_direct_product(parts);
  }
  if (starts("quasiunary:")) {
    std::string rest = spec.substr(11);
    if (rest.rfind("file:", 0) == 0) {
      std::string name = "latin";
      auto table = latin_square_from_file(rest.substr(5), &name);
      return build_quasigroup_unary("Q1(" + name + ")", table);
    }
    return quasigroup_unary_of(build_from_spec(rest));
  }
  if (starts("file:")) return algebra_from_file(spec.substr(5));
  throw InputError("unknown algebra spec '" + spec + "'");
}

}  // namespace algraph
