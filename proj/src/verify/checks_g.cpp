#include "checks.hpp"

#include <Eigen/Dense>

namespace mocktheta::checks {

namespace {

const std::vector<HalfInt>& r81_ms() {
  static const std::vector<HalfInt> v{hf(1), hf(3), hf(5)};
  return v;
}

// g^{(i)[m,p]}_k for all i, p and k, evaluated at a fixed tau.
struct GTable {
  HalfInt m;
  std::vector<HalfInt> ks;
  std::map<std::tuple<int, long, std::size_t>, FormalSeries> series;

  GTable(const HalfInt& m_, const QExp& order) : m(m_), ks(odd_half_range(m_)) {
    for (int i = 1; i <= 3; ++i)
      for (long p : p_values(m))
        for (std::size_t n = 0; n < ks.size(); ++n) series.emplace(std::tuple{i, p, n}, g_series(GFamilyIndex(i, m, p, ks[n]), order));
  }

  cplx value(int i, long p, std::size_t n, cplx tau) const { return series_eval(series.at({i, p, n}), tau).value; }
};

std::size_t index_of(const std::vector<HalfInt>& ks, const HalfInt& j) {
  for (std::size_t n = 0; n < ks.size(); ++n)
    if (ks[n] == j) return n;
  throw ParamDomain("j must be half-odd with 0 < j <= m, got " + j.str());
}

std::vector<std::size_t> j_indices(const CheckContext& ctx, const std::vector<HalfInt>& ks) {
  std::vector<std::size_t> out;
  for (const auto& j : ctx.halfints("j", ks)) out.push_back(index_of(ks, j));
  return out;
}

std::vector<long> p_sel(const CheckContext& ctx, const HalfInt& m) {
  auto ps = ctx.ints("p", p_values(m));
  for (long p : ps) check_p_range(m, p);
  return ps;
}

void s_law(CheckContext& ctx) {
  const QExp order = ctx.order(30);
  for (const auto& m : ctx.odd_half_m()) {
    const GTable g(m, order);
    const double md = m.to_double();
    const auto& ks = g.ks;
    const long top = m.twice_long();
    for (const auto& pt : ctx.points(s_law_points())) {
      const cplx tau = pt.tau, st = -1.0 / tau;
      std::map<std::tuple<int, long, std::size_t>, cplx> at_tau;
      for (const auto& [key, s] : g.series) at_tau[key] = series_eval(s, tau).value;
      for (int i : ctx.ints("i", {1, 2, 3})) {
        if (i < 1 || i > 3) throw ParamDomain("i must be 1, 2 or 3");
        const int partner = i == 1 ? 1 : (i == 2 ? 3 : 2);
        const cplx unit = i == 1 ? cplx(1) : (i == 2 ? I : -I);
        for (long p : p_sel(ctx, m)) {
          const double pd = double(p);
          for (std::size_t jn : j_indices(ctx, ks)) {
            const double jd = ks[jn].to_double();
            const double cj = ks[jn] == m ? 2.0 : 1.0;
            cplx sum = 0;
            for (std::size_t ln = 0; ln < ks.size(); ++ln) {
              const double sn = std::sin(pi * jd * ks[ln].to_double() / md);
              for (long q = 0; q <= top; ++q) {
                const double qd = double(q);
                double ph;
                if (i == 1) ph = -(2 * pd + 1) * (2 * qd + 1) / (2 * (2 * md + 1));
                else if (i == 2) ph = -(2 * pd + 1) * qd / (2 * md + 1);
                else ph = -pd * (2 * qd + 1) / (2 * md + 1);
                sum += epi(ph) * sn * at_tau.at({partner, q, ln});
              }
            }
            const cplx rhs = unit * tau / (cj * std::sqrt(md * (md + 0.5))) * sum;
            ctx.numeric(label("i=", i, " m=", m.str(), " p=", p, " j=", ks[jn].str(), at(pt)), g.value(i, p, jn, st), rhs);
          }
        }
      }
    }
  }
}

void t_law(CheckContext& ctx) {
  const QExp order = ctx.order(30);
  const std::vector<EvalPoint> dflt{EvalPoint(cplx(0.1, 0.9))};
  for (const auto& m : ctx.odd_half_m()) {
    const GTable g(m, order);
    const double md = m.to_double();
    for (const auto& pt : ctx.points(dflt)) {
      const cplx tau = pt.tau;
      for (int i : ctx.ints("i", {1, 2, 3})) {
        if (i < 1 || i > 3) throw ParamDomain("i must be 1, 2 or 3");
        for (long p : p_sel(ctx, m)) {
          const double pd = double(p);
          for (std::size_t jn : j_indices(ctx, g.ks)) {
            const double jd = g.ks[jn].to_double();
            const double jq = -jd * jd / (2 * md);
            const cplx ph = epi((2 * pd + 1) * (2 * pd + 1) / (4 * (2 * md + 1)) + jq - 0.25);
            cplx rhs;
            if (i == 1) rhs = ph * g.value(2, p, jn, tau);
            else if (i == 2) rhs = -ph * g.value(1, p, jn, tau);
            else rhs = epi(pd * pd / (2 * md + 1) + jq) * g.value(3, p, jn, tau);
            ctx.numeric(label("i=", i, " m=", m.str(), " p=", p, " j=", g.ks[jn].str(), at(pt)), g.value(i, p, jn, tau + 1.0),
                        rhs);
          }
        }
      }
    }
  }
}

void vanishing(CheckContext& ctx) {
  const QExp order = ctx.order(15);
  for (const auto& m : ctx.odd_half_m(r81_ms())) {
    ctx.symbolic(label("m=", m.str()), g_series(GFamilyIndex(3, m, 0, m), order), FormalSeries(order), order);
  }
}

void orthogonality(CheckContext& ctx) {
  for (const auto& m : ctx.odd_half_m(r81_ms())) {
    const auto ks = odd_half_range(m);
    const auto n = Eigen::Index(ks.size());
    const double md = m.to_double();
    // columns: l = k_1 .. k_n (the last one, l = m, weighted by 1/2)
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) s(a, b) = std::sin(pi * ks[a].to_double() * ks[b].to_double() / md);
    Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
    w(n - 1) = 0.5;
    const Eigen::MatrixXd gram = s * w.asDiagonal() * s.transpose();
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
    c(n - 1) = 2.0;
    const Eigen::MatrixXd expected = (md / 2) * c.asDiagonal().toDenseMatrix();
    ctx.residual(label("m=", m.str()), (gram - expected).cwiseAbs().maxCoeff());
  }
}

}  // namespace

void add_g(std::vector<CheckInfo>& reg) {
  reg.push_back({"g.T8.2.S", CheckKind::numeric,
                 "g^{(1)[m,p]}_j(-1/tau) = tau/(c_j sqrt(m(m+1/2))) sum_{l<=m} sum_{p'} e^{-pi i(2p+1)(2p'+1)/2(2m+1)} "
                 "sin(pi jl/m) g^{(1)[m,p']}_l(tau); g^(2) and g^(3) trade places with factors i tau and -i tau",
                 "m in {1/2,3/2}, all i, p, j, series order 30, tau in {i, 0.2+i}", 1e-6, s_law});
  reg.push_back({"g.T8.2.T", CheckKind::numeric,
                 "g^(1)_j(tau+1) = e^{pi i(2p+1)^2/4(2m+1) - pi i j^2/2m - pi i/4} g^(2)_j(tau), g^(2)_j(tau+1) = -e^{...} "
                 "g^(1)_j(tau), g^(3)_j(tau+1) = e^{pi i p^2/(2m+1) - pi i j^2/2m} g^(3)_j(tau)",
                 "m in {1/2,3/2}, all i, p, j, series order 30, tau = 0.1+0.9i", 1e-8, t_law});
  reg.push_back({"g.R8.1", CheckKind::symbolic, "g^{(3)[m,0]}_m = 0", "m in {1/2,3/2,5/2}, order 15", 0, vanishing});
  reg.push_back({"g.orth.N8.1", CheckKind::numeric,
                 "sum_{l<m} sin(pi jl/m) sin(pi kl/m) + 1/2 sin(pi j) sin(pi k) = (m/2) c_j delta_{jk}",
                 "m in {1/2,3/2,5/2}", 1e-12, orthogonality});
}

}  // namespace mocktheta::checks
