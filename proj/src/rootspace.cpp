#include "lieorb/rootspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {

constexpr double kCluster = 1e-8;
constexpr double kClusterGray = 1e-5;

// Basis indices whose matrices are diagonal (the Cartan part of the basis).
std::vector<int> cartan_indices(const MatrixLieAlgebra& alg) {
  std::vector<int> idx;
  for (int i = 0; i < alg.dim(); ++i) {
    const Mat& b = alg.basis()[i];
    const bool diag_block = alg.realified() ? (b.topLeftCorner(alg.n(), alg.n()).isDiagonal() &&
                                               b.bottomLeftCorner(alg.n(), alg.n()).isDiagonal())
                                            : b.isDiagonal();
    if (diag_block) idx.push_back(i);
  }
  return idx;
}

// Real diagonal Cartan elements H_k (the ones with no i factor).
std::vector<int> real_cartan_indices(const MatrixLieAlgebra& alg) {
  std::vector<int> idx;
  for (int k = 0; k + 1 < alg.n(); ++k) idx.push_back(alg.realified() ? 2 * k : k);
  return idx;
}

Mat gram_schmidt(const Mat& cols, const Mat& g) {
  Mat out(cols.rows(), 0);
  for (Eigen::Index c = 0; c < cols.cols(); ++c) {
    Vec v = cols.col(c);
    for (Eigen::Index k = 0; k < out.cols(); ++k) v -= out.col(k).dot(g * v) * out.col(k);
    const double nv = std::sqrt(v.dot(g * v));
    if (nv < 1e-12) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = v / nv;
  }
  return out;
}

Mat hcat(const Mat& a, const Mat& b) {
  Mat m(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  if (a.cols()) m.leftCols(a.cols()) = a;
  if (b.cols()) m.rightCols(b.cols()) = b;
  return m;
}

}  // namespace

Rational RestrictedRoot::exact_value(const std::vector<Rational>& h) const {
  if (diag.size() != h.size()) throw DomainError("exact_value: root has no diagonal coordinates");
  Rational s(0);
  for (std::size_t i = 0; i < h.size(); ++i) s += diag[i] * h[i];
  return s;
}

Mat maximal_abelian(const MatrixLieAlgebra& alg, const CartanSplit& split) {
  const int dim = alg.dim();
  const Mat to_p = 0.5 * (Mat::Identity(dim, dim) - alg.theta_matrix());
  Mat seeds(dim, 0);
  for (int i : cartan_indices(alg)) {
    const Vec v = to_p.col(i);
    if (v.norm() < 1e-12) continue;
    seeds.conservativeResize(Eigen::NoChange, seeds.cols() + 1);
    seeds.col(seeds.cols() - 1) = v;
  }
  Mat a = seeds.cols() ? rref_basis(seeds) : Mat(dim, 0);
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if ((alg.ad_of(a.col(i)) * a.col(j)).norm() > 1e-10)
        throw InconsistencyError("maximal_abelian: Cartan seeds do not commute");

  const Mat& P = split.p_basis;
  while (true) {
    Mat stacked(a.cols() * dim, P.cols());
    for (Eigen::Index i = 0; i < a.cols(); ++i) stacked.middleRows(i * dim, dim) = alg.ad_of(a.col(i)) * P;
    const Mat commutant = a.cols() ? Mat(P * null_space(stacked)) : P;
    if (commutant.cols() == a.cols()) break;
    if (commutant.cols() < a.cols()) throw InconsistencyError("maximal_abelian: commutant smaller than a");
    // Extend by the commutant direction <,>-orthogonal to a with largest norm.
    const Mat ga = gram_schmidt(a, alg.inner_matrix());
    Vec best;
    double best_norm = 0.0;
    for (Eigen::Index c = 0; c < commutant.cols(); ++c) {
      Vec v = commutant.col(c);
      for (Eigen::Index k = 0; k < ga.cols(); ++k) v -= ga.col(k).dot(alg.inner_matrix() * v) * ga.col(k);
      if (v.norm() > best_norm) {
        best_norm = v.norm();
        best = v;
      }
    }
    if (best_norm < 1e-8) throw DegeneracyError("maximal_abelian: commutant rank ambiguous");
    a.conservativeResize(Eigen::NoChange, a.cols() + 1);
    a.col(a.cols() - 1) = best / best_norm;
  }
  return gram_schmidt(a, alg.inner_matrix());
}

RestrictedRootSystem restricted_roots(const MatrixLieAlgebra& alg, const Mat& a) {
  const int dim = alg.dim();
  const Mat& G = alg.inner_matrix();
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) throw InconsistencyError("inner product is not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd Linv = L.inverse();

  struct Cluster {
    Eigen::MatrixXd q;
    std::vector<double> values;
  };
  std::vector<Cluster> clusters{{Eigen::MatrixXd::Identity(dim, dim), {}}};
  for (Eigen::Index h = 0; h < a.cols(); ++h) {
    // Symmetric form of ad(H) for the inner product: L^T ad(H) L^{-T}.
    const Eigen::MatrixXd S = L.transpose() * alg.ad_of(a.col(h)) * Linv.transpose();
    if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-9)
      throw InconsistencyError("restricted_roots: ad(H) is not symmetric for <,>");
    std::vector<Cluster> next;
    for (const auto& cl : clusters) {
      const Eigen::MatrixXd M = cl.q.transpose() * S * cl.q;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
      const auto& ev = es.eigenvalues();
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i <= ev.size(); ++i) {
        if (i < ev.size()) {
          const double gap = ev(i) - ev(i - 1);
          if (gap > kCluster && gap < kClusterGray) throw DegeneracyError("restricted_roots: ambiguous eigencluster");
          if (gap <= kCluster) continue;
        }
        Cluster c;
        c.q = cl.q * es.eigenvectors().middleCols(start, i - start);
        c.values = cl.values;
        c.values.push_back(ev.segment(start, i - start).mean());
        next.push_back(std::move(c));
        start = i;
      }
    }
    clusters = std::move(next);
  }

  RestrictedRootSystem rs;
  rs.a_basis = a;
  rs.dim_g = dim;
  const auto real_h = real_cartan_indices(alg);
  // a-coordinates of the real diagonal H_k, if they all lie in a.
  Mat h_in_a(a.cols(), static_cast<Eigen::Index>(real_h.size()));
  bool diag_ok = true;
  for (std::size_t k = 0; k < real_h.size(); ++k) {
    const Vec h = Vec::Unit(dim, real_h[k]);
    h_in_a.col(static_cast<Eigen::Index>(k)) = a.transpose() * G * h;
    if ((a * h_in_a.col(static_cast<Eigen::Index>(k)) - h).norm() > 1e-9) diag_ok = false;
  }

  Mat g0(dim, 0);
  for (const auto& cl : clusters) {
    const Mat x = Linv.transpose() * cl.q;
    Vec f = Eigen::Map<const Vec>(cl.values.data(), static_cast<Eigen::Index>(cl.values.size()));
    if (f.norm() < kCluster) {
      g0 = hcat(g0, x);
      continue;
    }
    RestrictedRoot r;
    r.functional = f;
    r.space_basis = rref_basis(x);
    r.multiplicity = static_cast<int>(x.cols());
    r.covector = G * a * f;
    if (diag_ok) {
      const int n = alg.n();
      std::vector<Rational> steps;
      for (Eigen::Index k = 0; k < h_in_a.cols(); ++k) {
        const double v = f.dot(h_in_a.col(k));
        const double rv = std::round(v);
        if (std::abs(v - rv) > 1e-8) throw DegeneracyError("restricted_roots: non-integral root value");
        steps.emplace_back(static_cast<std::int64_t>(rv));
      }
      // r_k - r_{k+1} = steps[k], sum r = 0.
      std::vector<Rational> partial(static_cast<std::size_t>(n), Rational(0));
      for (int k = 1; k < n; ++k) partial[k] = partial[k - 1] - steps[k - 1];
      const Rational shift = -std::accumulate(partial.begin(), partial.end(), Rational(0)) / Rational(n);
      for (auto& p : partial) p += shift;
      r.diag = partial;
    }
    rs.roots.push_back(std::move(r));
  }
  std::sort(rs.roots.begin(), rs.roots.end(), [](const RestrictedRoot& x, const RestrictedRoot& y) {
    if (!x.diag.empty() && !y.diag.empty()) return lex_greater(x.diag, y.diag);
    std::vector<double> fx(x.functional.data(), x.functional.data() + x.functional.size());
    std::vector<double> fy(y.functional.data(), y.functional.data() + y.functional.size());
    return lex_greater(fx, fy);
  });
  rs.zero_space = g0.cols() ? rref_basis(g0) : g0;
  const Mat to_k = 0.5 * (Mat::Identity(dim, dim) + alg.theta_matrix());
  rs.m_basis = rs.zero_space.cols() ? rref_basis(to_k * rs.zero_space) : Mat(dim, 0);
  return rs;
}

std::vector<int> positive_system(const RestrictedRootSystem& rs, const Vec& h_reg) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double v = rs.roots[i].value(h_reg);
    if (std::abs(v) <= 1e-8) throw DomainError("positive_system: element is not regular");
    if (v > 0) pos.push_back(static_cast<int>(i));
  }
  return pos;
}

Vec default_regular(const MatrixLieAlgebra& alg) {
  std::vector<double> h(static_cast<std::size_t>(alg.n()));
  for (int i = 0; i < alg.n(); ++i) h[i] = static_cast<double>(alg.n() - 1 - 2 * i);
  return alg.diag_element(h);
}

int find_root(const RestrictedRootSystem& rs, const std::vector<Rational>& diag) {
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.roots[i].diag == diag) return static_cast<int>(i);
  return -1;
}

namespace {

int find_functional(const RestrictedRootSystem& rs, const Vec& f) {
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if ((rs.roots[i].functional - f).norm() < 1e-7) return static_cast<int>(i);
  return -1;
}

}  // namespace

double k_from_roots_check(const MatrixLieAlgebra& alg, const RestrictedRootSystem& rs, const std::vector<int>& positive,
                          const CartanSplit& split) {
  Mat span = rs.m_basis;
  for (int idx : positive) {
    const Mat& x = rs.roots[idx].space_basis;
    span = hcat(span, x + alg.theta_matrix() * x);
  }
  return subspace_distance(span, split.k_basis);
}

RootResiduals root_residuals(const MatrixLieAlgebra& alg, const CartanSplit& split, const RestrictedRootSystem& rs,
                             const std::vector<int>& positive) {
  RootResiduals r;
  const int dim = alg.dim();
  const Mat& th = alg.theta_matrix();

  for (const auto& root : rs.roots)
    for (Eigen::Index h = 0; h < rs.a_basis.cols(); ++h) {
      const Mat adh = alg.ad_of(rs.a_basis.col(h));
      for (Eigen::Index c = 0; c < root.space_basis.cols(); ++c) {
        const Vec x = root.space_basis.col(c);
        r.eigen = std::max(r.eigen, (adh * x - root.functional(h) * x).norm() / x.norm());
      }
    }

  for (Eigen::Index i = 0; i < rs.a_basis.cols(); ++i)
    for (Eigen::Index j = 0; j < rs.a_basis.cols(); ++j)
      r.abelian = std::max(r.abelian, (alg.ad_of(rs.a_basis.col(i)) * rs.a_basis.col(j)).norm());

  int mult_sum = 0;
  for (const auto& root : rs.roots) mult_sum += root.multiplicity;
  r.dim_bookkeeping = dim - static_cast<int>(rs.m_basis.cols()) - static_cast<int>(rs.a_basis.cols()) - mult_sum;

  // Adapted basis [g_0 | g_alpha ...] to read off components.
  Mat adapted = rs.zero_space;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> block{{0, rs.zero_space.cols()}};
  for (const auto& root : rs.roots) {
    block.emplace_back(adapted.cols(), root.space_basis.cols());
    adapted = hcat(adapted, root.space_basis);
  }
  if (adapted.cols() != dim) throw InconsistencyError("root spaces do not span the algebra");
  const Mat inv = adapted.inverse();

  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const int neg = find_functional(rs, -rs.roots[i].functional);
    if (neg < 0) {
      r.symmetric = false;
      continue;
    }
    r.theta_pairing =
        std::max(r.theta_pairing, subspace_distance(th * rs.roots[i].space_basis, rs.roots[neg].space_basis));
    for (std::size_t j = 0; j < rs.roots.size(); ++j) {
      const Vec sum = rs.roots[i].functional + rs.roots[j].functional;
      std::size_t target = 0;  // block index; 0 is g_0
      bool has_target = true;
      if (sum.norm() >= 1e-7) {
        const int t = find_functional(rs, sum);
        has_target = t >= 0;
        target = static_cast<std::size_t>(t + 1);
      }
      for (Eigen::Index a = 0; a < rs.roots[i].space_basis.cols(); ++a)
        for (Eigen::Index b = 0; b < rs.roots[j].space_basis.cols(); ++b) {
          const Vec z = alg.ad_of(rs.roots[i].space_basis.col(a)) * rs.roots[j].space_basis.col(b);
          Vec comp = inv * z;
          if (has_target) comp.segment(block[target].first, block[target].second).setZero();
          r.bracket_grading = std::max(r.bracket_grading, (adapted * comp).norm());
        }
    }
  }

  const Mat to_p = 0.5 * (Mat::Identity(dim, dim) - th);
  r.g0_cap_p = subspace_distance(rref_basis(to_p * rs.zero_space), rs.a_basis);

  std::vector<bool> is_pos(rs.roots.size(), false);
  for (int p : positive) is_pos[p] = true;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const int neg = find_functional(rs, -rs.roots[i].functional);
    if (neg < 0 || is_pos[i] == is_pos[neg]) r.partition = false;
  }
  for (int p : positive)
    for (int q : positive) {
      const int t = find_functional(rs, rs.roots[p].functional + rs.roots[q].functional);
      if (t >= 0 && !is_pos[t]) r.positive_closed = false;
    }
  (void)split;
  return r;
}

std::shared_ptr<const Structure> build_structure(const AlgebraSpec& spec) {
  auto s = std::make_shared<Structure>();
  s->algebra = std::make_shared<const MatrixLieAlgebra>(spec);
  s->split = cartan_split(*s->algebra);
  s->roots = restricted_roots(*s->algebra, maximal_abelian(*s->algebra, s->split));
  s->positive = positive_system(s->roots, default_regular(*s->algebra));
  return s;
}

}  // namespace lieorb
