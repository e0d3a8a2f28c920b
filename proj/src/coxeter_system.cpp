#include "coxbound/coxeter_system.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace coxbound {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators) : names_(std::move(generators)) {
  if (names_.empty()) throw std::invalid_argument("a Coxeter system needs at least one generator");
  if (rank() > kMaxGenerators) {
    throw std::invalid_argument("at most " + std::to_string(kMaxGenerators) + " generators supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator '" + n + "'");
  }
  const int n = rank();
  orders_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) orders_[i * n + i] = 1;
}

CoxeterSystem CoxeterSystem::complete(int n, Order label) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
  CoxeterSystem sys(std::move(names));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sys.set_order(i, j, label);
  return sys;
}

std::optional<Gen> CoxeterSystem::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Gen>(it - names_.begin());
}

Order CoxeterSystem::order(Gen s, Gen t) const {
  const int m = orders_.at(static_cast<std::size_t>(s * rank() + t));
  return m == 0 ? Order::infinite() : Order::finite(m);
}

void CoxeterSystem::set_order(Gen s, Gen t, Order m) {
  if (s < 0 || t < 0 || s >= rank() || t >= rank()) throw std::out_of_range("generator index");
  if (s == t) throw std::invalid_argument("diagonal orders are fixed at 1");
  if (m.is_finite() && m.value() < 2) {
    throw std::invalid_argument("off-diagonal label " + std::to_string(m.value()) + " forbidden (must be >= 2 or inf)");
  }
  const int n = rank();
  orders_[s * n + t] = m.is_infinite() ? 0 : m.value();
  orders_[t * n + s] = orders_[s * n + t];
}

CoxeterSystem CoxeterSystem::permuted(const std::vector<Gen>& perm) const {
  if (static_cast<int>(perm.size()) != rank()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::string> names;
  for (Gen g : perm) names.push_back(names_.at(g));
  CoxeterSystem out(std::move(names));
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) out.set_order(i, j, order(perm[i], perm[j]));
  return out;
}

std::string CoxeterSystem::to_presentation() const {
  std::ostringstream os;
  os << "gens";
  for (const auto& n : names_) os << ' ' << n;
  os << '\n';
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (order(i, j).is_finite()) os << names_[i] << ' ' << names_[j] << ' ' << order(i, j).value() << '\n';
  return os.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

CoxeterSystem parse_system(std::string_view text) {
  std::optional<CoxeterSystem> sys;
  std::set<std::pair<Gen, Gen>> assigned;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("\n;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (!toks.empty()) {
      if (toks[0] == "gens") {
        if (sys) throw ParseError(line_no, "second 'gens' line");
        if (toks.size() < 2) throw ParseError(line_no, "'gens' needs at least one generator");
        try {
          sys.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, e.what());
        }
      } else {
        if (!sys) throw ParseError(line_no, "expected 'gens' line before labels");
        if (toks.size() != 3) throw ParseError(line_no, "expected '<gen> <gen> <label>'");
        auto s = sys->index_of(toks[0]);
        auto t = sys->index_of(toks[1]);
        if (!s) throw ParseError(line_no, "unknown generator '" + toks[0] + "'");
        if (!t) throw ParseError(line_no, "unknown generator '" + toks[1] + "'");
        if (*s == *t) throw ParseError(line_no, "label on a generator with itself");
        Order m = Order::infinite();
        if (toks[2] != "inf") {
          int v = 0;
          const auto& lab = toks[2];
          auto [p, ec] = std::from_chars(lab.data(), lab.data() + lab.size(), v);
          if (ec != std::errc() || p != lab.data() + lab.size()) {
            throw ParseError(line_no, "bad label '" + lab + "'");
          }
          if (v < 2) throw ParseError(line_no, "off-diagonal label " + lab + " forbidden (must be >= 2 or inf)");
          m = Order::finite(v);
        }
        auto key = std::minmax(*s, *t);
        if (!assigned.insert(key).second && sys->order(*s, *t) != m) {
          throw ParseError(line_no, "asymmetric or conflicting label for " + toks[0] + " " + toks[1]);
        }
        sys->set_order(*s, *t, m);
      }
    }
    if (end == text.size()) break;
    if (text[end] == '\n') ++line_no;
    pos = end + 1;
  }
  if (!sys) throw ParseError(line_no, "missing 'gens' line");
  return *sys;
}

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string to_string(TriangleKind k) {
  switch (k) {
    case TriangleKind::Spherical: return "Spherical";
    case TriangleKind::Euclidean: return "Euclidean";
    case TriangleKind::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

TriangleType triangle_type(const CoxeterSystem& sys, GeneratorSet triple) {
  if (triple.size() != 3) throw std::invalid_argument("triangle_type needs exactly 3 generators");
  const auto g = triple.members();
  TriangleType out{TriangleKind::Hyperbolic,
                   {sys.order(g[0], g[1]), sys.order(g[1], g[2]), sys.order(g[0], g[2])},
                   0};
  for (const auto& m : out.labels) out.reciprocal_sum += m.reciprocal();
  const int c = cmp(out.reciprocal_sum, 1);
  out.kind = c > 0 ? TriangleKind::Spherical : (c == 0 ? TriangleKind::Euclidean : TriangleKind::Hyperbolic);
  return out;
}

std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& sys, GeneratorSet subset) {
  std::vector<GeneratorSet> comps;
  GeneratorSet left = subset;
  while (!left.empty()) {
    GeneratorSet comp;
    std::vector<Gen> stack{left.members().front()};
    left.erase(stack.back());
    comp.insert(stack.back());
    while (!stack.empty()) {
      Gen s = stack.back();
      stack.pop_back();
      for (Gen t : left.members()) {
        Order m = sys.order(s, t);
        if (m.is_infinite() || m.value() >= 3) {
          left.erase(t);
          comp.insert(t);
          stack.push_back(t);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace coxbound
