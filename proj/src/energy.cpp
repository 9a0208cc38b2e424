#include "aims/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace aims {

namespace {

template <typename Map, typename Key>
void accumulate(Map& m, const Key& key, double delta) {
  auto it = m.find(key);
  double v = (it == m.end() ? 0.0 : it->second) + delta;
  if (v == 0.0) {
    if (it != m.end()) m.erase(it);
  } else if (it == m.end()) {
    m.emplace(key, v);
  } else {
    it->second = v;
  }
}

PairKey sorted_pair(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) throw std::invalid_argument("pair indices must be distinct");
  return {i, j};
}

TripleKey sorted_triple(int i, int j, int k) {
  TripleKey t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("triple indices must be distinct");
  return t;
}

}  // namespace

double PuboPolynomial::linear_at(int n) const {
  auto it = linear_.find(n);
  return it == linear_.end() ? 0.0 : it->second;
}

double PuboPolynomial::quadratic_at(int n, int j) const {
  auto it = quadratic_.find(sorted_pair(n, j));
  return it == quadratic_.end() ? 0.0 : it->second;
}

double PuboPolynomial::cubic_at(int n, int j, int k) const {
  auto it = cubic_.find(sorted_triple(n, j, k));
  return it == cubic_.end() ? 0.0 : it->second;
}

void PuboPolynomial::add_monomial_linear(int n, double coeff) {
  accumulate(linear_, n, -coeff);
}

void PuboPolynomial::add_monomial_quadratic(int n, double coeff, int j) {
  accumulate(quadratic_, sorted_pair(n, j), -coeff);
}

void PuboPolynomial::add_monomial_cubic(int n, int j, int k, double coeff) {
  accumulate(cubic_, sorted_triple(n, j, k), -coeff);
}

void QuboProblem::add_linear(int i, double c) { accumulate(linear, i, c); }

void QuboProblem::add_quadratic(int i, int j, double c) {
  accumulate(quadratic, sorted_pair(i, j), c);
}

PuboPolynomial pubo_from_cnf(const CnfFormula& f) {
  PuboPolynomial p(f.num_vars());
  for (const Clause& c : f.clauses()) {
    // Each factor is (const + coef * x_var): (1 - x) for a positive
    // literal, x for a negated one. Expand the product over subsets.
    const int sz = static_cast<int>(c.lits.size());
    for (int mask = 0; mask < (1 << sz); ++mask) {
      double coeff = 1.0;
      std::vector<int> vars;
      for (int i = 0; i < sz; ++i) {
        const Literal& l = c.lits[i];
        if (mask & (1 << i)) {
          coeff *= l.negated ? 1.0 : -1.0;
          vars.push_back(l.var);
        } else {
          coeff *= l.negated ? 0.0 : 1.0;
        }
      }
      if (coeff == 0.0) continue;
      switch (vars.size()) {
        case 0: p.add_monomial_constant(coeff); break;
        case 1: p.add_monomial_linear(vars[0], coeff); break;
        case 2: p.add_monomial_quadratic(vars[0], coeff, vars[1]); break;
        case 3: p.add_monomial_cubic(vars[0], vars[1], vars[2], coeff); break;
      }
    }
  }
  return p;
}

double evaluate(const PuboPolynomial& p, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != p.num_vars())
    throw CnfError(CnfErrorKind::LengthMismatch, "point length != num_vars");
  double h = p.constant();
  for (const auto& [n, l] : p.linear()) h -= l * v[n];
  for (const auto& [nj, q] : p.quadratic()) h -= q * v[nj.first] * v[nj.second];
  for (const auto& [t, c] : p.cubic()) h -= c * v[t[0]] * v[t[1]] * v[t[2]];
  return h;
}

std::vector<double> gradient(const PuboPolynomial& p, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != p.num_vars())
    throw CnfError(CnfErrorKind::LengthMismatch, "point length != num_vars");
  std::vector<double> g(p.num_vars(), 0.0);
  for (const auto& [n, l] : p.linear()) g[n] -= l;
  for (const auto& [nj, q] : p.quadratic()) {
    g[nj.first] -= q * v[nj.second];
    g[nj.second] -= q * v[nj.first];
  }
  for (const auto& [t, c] : p.cubic()) {
    g[t[0]] -= c * v[t[1]] * v[t[2]];
    g[t[1]] -= c * v[t[0]] * v[t[2]];
    g[t[2]] -= c * v[t[0]] * v[t[1]];
  }
  return g;
}

double evaluate(const QuboProblem& q, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != q.num_vars)
    throw CnfError(CnfErrorKind::LengthMismatch, "point length != num_vars");
  double e = q.constant;
  for (const auto& [i, a] : q.linear) e += a * x[i];
  for (const auto& [ij, b] : q.quadratic) e += b * x[ij.first] * x[ij.second];
  return e;
}

double evaluate(const IsingProblem& p, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != p.num_spins)
    throw CnfError(CnfErrorKind::LengthMismatch, "point length != num_spins");
  double e = p.constant;
  for (const auto& [i, hi] : p.h) e -= hi * sigma[i];
  for (const auto& [ij, j] : p.J) e -= j * sigma[ij.first] * sigma[ij.second];
  return e;
}

namespace {

// Converts the stored H-convention back to plain monomial coefficients
// and seeds the QUBO with the degree-<=2 part.
QuboProblem qubo_seed(const PuboPolynomial& p) {
  QuboProblem q;
  q.num_original = p.num_vars();
  q.num_vars = p.num_vars();
  q.constant = p.constant();
  for (const auto& [n, l] : p.linear()) q.add_linear(n, -l);
  for (const auto& [nj, c] : p.quadratic()) q.add_quadratic(nj.first, nj.second, -c);
  return q;
}

}  // namespace

QuboProblem quadratize_rosenberg(const PuboPolynomial& p, double k) {
  if (k <= 1.0)
    throw std::invalid_argument("Rosenberg penalty weight must satisfy k > 1");
  QuboProblem q = qubo_seed(p);
  q.penalty_k = k;
  std::map<PairKey, int> pair_aux;
  for (const auto& [t, c] : p.cubic()) {
    const double m = -c;  // plain monomial coefficient of x_a x_b x_c
    // Prefer a pair already backed by an auxiliary; otherwise the
    // lexicographically smallest pair of the triple.
    const PairKey candidates[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    const PairKey* chosen = nullptr;
    for (const PairKey& pk : candidates)
      if (pair_aux.count(pk)) { chosen = &pk; break; }
    if (!chosen) chosen = &candidates[0];
    int z;
    auto it = pair_aux.find(*chosen);
    if (it != pair_aux.end()) {
      z = it->second;
    } else {
      z = q.num_vars++;
      pair_aux.emplace(*chosen, z);
      q.aux_map.emplace(z, *chosen);
    }
    int third = t[0] + t[1] + t[2] - chosen->first - chosen->second;
    // m*x_a*x_b*x_c -> m*z*x_third + w*(x_a x_b - 2(x_a + x_b)z + 3z)
    q.add_quadratic(z, third, m);
    const double w = k * std::max(1.0, std::abs(m));
    q.add_quadratic(chosen->first, chosen->second, w);
    q.add_quadratic(chosen->first, z, -2.0 * w);
    q.add_quadratic(chosen->second, z, -2.0 * w);
    q.add_linear(z, 3.0 * w);
  }
  return q;
}

QuboProblem quadratize_kzfd(const PuboPolynomial& p) {
  QuboProblem q = qubo_seed(p);
  for (const auto& [t, c] : p.cubic()) {
    const double m = -c;
    const double a = std::abs(m);
    const int z = q.num_vars++;
    q.aux_map.emplace(z, PairKey{t[0], t[1]});
    if (m < 0.0) {
      // -a*x1*x2*x3 -> a*(2 - x1 - x2 - x3)*z
      q.add_linear(z, 2.0 * a);
      for (int v : t) q.add_quadratic(v, z, -a);
    } else {
      // +a*x1*x2*x3 -> a*[(1 + x1 - x2 - x3)*z + x2*x3]
      q.add_linear(z, a);
      q.add_quadratic(t[0], z, a);
      q.add_quadratic(t[1], z, -a);
      q.add_quadratic(t[2], z, -a);
      q.add_quadratic(t[1], t[2], a);
    }
  }
  return q;
}

IsingProblem qubo_to_ising(const QuboProblem& q) {
  IsingProblem is;
  is.num_spins = q.num_vars;
  is.constant = q.constant;
  std::vector<double> h(q.num_vars, 0.0);
  for (const auto& [i, a] : q.linear) {
    is.constant += a / 2.0;
    h[i] -= a / 2.0;
  }
  for (const auto& [ij, b] : q.quadratic) {
    is.constant += b / 4.0;
    h[ij.first] -= b / 4.0;
    h[ij.second] -= b / 4.0;
    if (b != 0.0) is.J.emplace(ij, -b / 4.0);
  }
  for (int i = 0; i < q.num_vars; ++i)
    if (h[i] != 0.0) is.h.emplace(i, h[i]);
  return is;
}

QuboProblem ising_to_qubo(const IsingProblem& is) {
  QuboProblem q;
  q.num_vars = is.num_spins;
  q.num_original = is.num_spins;
  q.constant = is.constant;
  for (const auto& [i, hi] : is.h) {
    q.constant += hi;
    q.add_linear(i, -2.0 * hi);
  }
  for (const auto& [ij, j] : is.J) {
    q.constant -= j;
    q.add_linear(ij.first, 2.0 * j);
    q.add_linear(ij.second, 2.0 * j);
    q.add_quadratic(ij.first, ij.second, -4.0 * j);
  }
  return q;
}

std::string pubo_to_json(const PuboPolynomial& p) {
  nlohmann::json j;
  j["num_vars"] = p.num_vars();
  j["constant"] = p.constant();
  auto& lin = j["linear"] = nlohmann::json::array();
  for (const auto& [n, v] : p.linear()) lin.push_back({n, v});
  auto& quad = j["quadratic"] = nlohmann::json::array();
  for (const auto& [nj, v] : p.quadratic()) quad.push_back({nj.first, nj.second, v});
  auto& cub = j["cubic"] = nlohmann::json::array();
  for (const auto& [t, v] : p.cubic()) cub.push_back({t[0], t[1], t[2], v});
  return j.dump();
}

PuboPolynomial pubo_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PuboPolynomial p(j.at("num_vars").get<int>());
  p.set_constant(j.at("constant").get<double>());
  for (const auto& e : j.at("linear"))
    p.add_monomial_linear(e[0].get<int>(), -e[1].get<double>());
  for (const auto& e : j.at("quadratic"))
    p.add_monomial_quadratic(e[0].get<int>(), -e[2].get<double>(), e[1].get<int>());
  for (const auto& e : j.at("cubic"))
    p.add_monomial_cubic(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                         -e[3].get<double>());
  return p;
}

std::string qubo_to_json(const QuboProblem& q) {
  nlohmann::json j;
  j["num_vars"] = q.num_vars;
  j["num_original"] = q.num_original;
  j["constant"] = q.constant;
  j["penalty_k"] = q.penalty_k;
  auto& lin = j["linear"] = nlohmann::json::array();
  for (const auto& [n, v] : q.linear) lin.push_back({n, v});
  auto& quad = j["quadratic"] = nlohmann::json::array();
  for (const auto& [nj, v] : q.quadratic) quad.push_back({nj.first, nj.second, v});
  auto& aux = j["aux_map"] = nlohmann::json::array();
  for (const auto& [z, pk] : q.aux_map) aux.push_back({z, pk.first, pk.second});
  return j.dump();
}

QuboProblem qubo_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QuboProblem q;
  q.num_vars = j.at("num_vars").get<int>();
  q.num_original = j.at("num_original").get<int>();
  q.constant = j.at("constant").get<double>();
  q.penalty_k = j.at("penalty_k").get<double>();
  for (const auto& e : j.at("linear")) q.add_linear(e[0].get<int>(), e[1].get<double>());
  for (const auto& e : j.at("quadratic"))
    q.add_quadratic(e[0].get<int>(), e[1].get<int>(), e[2].get<double>());
  for (const auto& e : j.at("aux_map"))
    q.aux_map.emplace(e[0].get<int>(), PairKey{e[1].get<int>(), e[2].get<int>()});
  return q;
}

}  // namespace aims
