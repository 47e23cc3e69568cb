#include "remotal/norms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace remotal {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kFacetTol = 1e-9;
constexpr double kMaxFacetCombinations = 2e7;

void check_p(double p) {
  if (!(p >= 1.0)) {  // also rejects NaN
    throw Error(Errc::invalid_norm, "p must be in [1, inf]", "p");
  }
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

double max_abs_diff(const Point& a, const Point& b, double sign) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - sign * b[i]));
  return m;
}

// Facets of conv(vertices) for a centrally symmetric, spanning vertex set.
// Every dim-subset of vertices whose affine hull misses the origin defines a
// candidate hyperplane <a, v> = 1; it is a facet when all vertices satisfy
// <a, v> <= 1. One normal per antipodal pair is kept.
std::vector<double> enumerate_facets(const std::vector<Point>& vertices, std::size_t dim) {
  const std::size_t count = vertices.size();
  if (binomial(count, dim) > kMaxFacetCombinations) {
    throw Error(Errc::invalid_norm, "too many vertices for facet enumeration", "vertices");
  }

  std::vector<double> facets;
  std::vector<std::size_t> combo(dim);
  for (std::size_t i = 0; i < dim; ++i) combo[i] = i;

  Eigen::MatrixXd system(dim, dim);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim));

  auto already_known = [&](const Eigen::VectorXd& a) {
    const double scale = 1.0 + a.cwiseAbs().maxCoeff();
    for (std::size_t f = 0; f < facets.size() / dim; ++f) {
      double plus = 0.0;
      double minus = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double stored = facets[f * dim + i];
        plus = std::max(plus, std::abs(stored - a[static_cast<Eigen::Index>(i)]));
        minus = std::max(minus, std::abs(stored + a[static_cast<Eigen::Index>(i)]));
      }
      if (std::min(plus, minus) <= kFacetTol * scale) return true;
    }
    return false;
  };

  while (true) {
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        system(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vertices[combo[r]][c];
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (lu.isInvertible()) {
      const Eigen::VectorXd a = lu.solve(ones);
      bool supporting = true;
      for (const Point& v : vertices) {
        double dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += a[static_cast<Eigen::Index>(i)] * v[i];
        if (dot > 1.0 + kFacetTol) {
          supporting = false;
          break;
        }
      }
      if (supporting && !already_known(a)) {
        for (std::size_t i = 0; i < dim; ++i) facets.push_back(a[static_cast<Eigen::Index>(i)]);
      }
    }

    // next combination in lexicographic order
    std::size_t k = dim;
    while (k > 0 && combo[k - 1] == count - dim + (k - 1)) --k;
    if (k == 0) break;
    ++combo[k - 1];
    for (std::size_t j = k; j < dim; ++j) combo[j] = combo[j - 1] + 1;
  }
  return facets;
}

}  // namespace

NormSpec NormSpec::lp(double p, std::size_t dim) {
  check_p(p);
  if (dim == 0) throw Error(Errc::invalid_norm, "dim must be positive", "dim");
  NormSpec n;
  n.kind_ = NormKind::lp;
  n.dim_ = dim;
  n.p_ = p;
  return n;
}

NormSpec NormSpec::weighted_lp(double p, std::vector<double> weights) {
  check_p(p);
  if (weights.empty()) throw Error(Errc::invalid_norm, "weights must be non-empty", "weights");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(Errc::invalid_norm, "every weight must be positive and finite", "weights");
    }
  }
  NormSpec n;
  n.kind_ = NormKind::weighted_lp;
  n.dim_ = weights.size();
  n.p_ = p;
  n.scale_.reserve(weights.size());
  for (double w : weights) n.scale_.push_back(std::isinf(p) ? w : std::pow(w, 1.0 / p));
  n.weights_ = std::move(weights);
  return n;
}

NormSpec NormSpec::polyhedral(std::vector<Point> vertices) {
  if (vertices.empty()) throw Error(Errc::invalid_norm, "vertex set is empty", "vertices");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw Error(Errc::invalid_norm, "vertices must have positive dimension", "vertices");
  for (const Point& v : vertices) {
    if (v.size() != dim) throw Error(Errc::dimension_mismatch, "vertices differ in dimension", "vertices");
    for (double c : v) {
      if (!std::isfinite(c)) throw Error(Errc::invalid_norm, "vertex coordinates must be finite", "vertices");
    }
    if (std::all_of(v.begin(), v.end(), [](double c) { return std::abs(c) <= kSymmetryTol; })) {
      throw Error(Errc::invalid_norm, "origin is not allowed as a vertex", "vertices");
    }
  }
  for (const Point& v : vertices) {
    const bool mirrored = std::any_of(vertices.begin(), vertices.end(),
                                      [&](const Point& w) { return max_abs_diff(w, v, -1.0) <= kSymmetryTol; });
    if (!mirrored) throw Error(Errc::invalid_norm, "vertex set is not centrally symmetric", "vertices");
  }

  Eigen::MatrixXd m(static_cast<Eigen::Index>(vertices.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vertices[r][c];
  }
  if (static_cast<std::size_t>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank()) != dim) {
    throw Error(Errc::invalid_norm, "vertices do not span the space", "vertices");
  }

  std::vector<Point> distinct;
  for (const Point& v : vertices) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const Point& w) { return max_abs_diff(w, v, 1.0) <= kSymmetryTol; });
    if (!seen) distinct.push_back(v);
  }

  NormSpec n;
  n.kind_ = NormKind::polyhedral;
  n.dim_ = dim;
  n.p_ = 0.0;
  n.facets_ = enumerate_facets(distinct, dim);
  if (n.facets_.empty()) throw Error(Errc::invalid_norm, "no facets found", "vertices");
  n.vertices_ = std::move(vertices);
  return n;
}

template <typename Diff>
double NormSpec::eval_diff(Diff&& diff) const {
  switch (kind_) {
    case NormKind::lp:
    case NormKind::weighted_lp: {
      const bool weighted = kind_ == NormKind::weighted_lp;
      if (std::isinf(p_)) {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
          const double v = std::abs(diff(i)) * (weighted ? scale_[i] : 1.0);
          if (v > m) m = v;
        }
        return m;
      }
      if (p_ == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) s += std::abs(diff(i)) * (weighted ? weights_[i] : 1.0);
        return s;
      }
      if (p_ == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
          const double v = diff(i);
          s += v * v * (weighted ? weights_[i] : 1.0);
        }
        return std::sqrt(s);
      }
      // General p: factor out the largest scaled magnitude to avoid overflow.
      double m = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, std::abs(diff(i)) * (weighted ? scale_[i] : 1.0));
      if (m == 0.0) return 0.0;
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        s += std::pow(std::abs(diff(i)) * (weighted ? scale_[i] : 1.0) / m, p_);
      }
      return m * std::pow(s, 1.0 / p_);
    }
    case NormKind::polyhedral: {
      double g = 0.0;
      const std::size_t count = facet_count();
      for (std::size_t k = 0; k < count; ++k) {
        const double* a = facets_.data() + k * dim_;
        double dot = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) dot += a[i] * diff(i);
        g = std::max(g, std::abs(dot));
      }
      return g;
    }
  }
  return 0.0;
}

double NormSpec::eval(std::span<const double> x) const {
  if (x.size() != dim_) throw Error(Errc::dimension_mismatch, "point dimension does not match norm", "x");
  return eval_diff([&](std::size_t i) { return x[i]; });
}

double NormSpec::distance(std::span<const double> a, std::span<const double> b) const {
  if (a.size() != dim_ || b.size() != dim_) {
    throw Error(Errc::dimension_mismatch, "point dimension does not match norm");
  }
  return eval_diff([&](std::size_t i) { return a[i] - b[i]; });
}

double NormSpec::box_upper(std::span<const double> lo, std::span<const double> hi) const {
  if (kind_ != NormKind::polyhedral) {
    return eval_diff([&](std::size_t i) { return std::max(std::abs(lo[i]), std::abs(hi[i])); });
  }
  // Support function of the box in direction +-a_k.
  double g = 0.0;
  const std::size_t count = facet_count();
  for (std::size_t k = 0; k < count; ++k) {
    const double* a = facets_.data() + k * dim_;
    double up = 0.0;
    double down = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      const double x = a[i] * lo[i];
      const double y = a[i] * hi[i];
      up += std::max(x, y);
      down += std::min(x, y);
    }
    g = std::max({g, up, -down});
  }
  return g;
}

double NormSpec::box_lower(std::span<const double> lo, std::span<const double> hi) const {
  if (kind_ != NormKind::polyhedral) {
    return eval_diff([&](std::size_t i) {
      if (lo[i] > 0.0) return lo[i];
      if (hi[i] < 0.0) return -hi[i];
      return 0.0;
    });
  }
  double g = 0.0;
  const std::size_t count = facet_count();
  for (std::size_t k = 0; k < count; ++k) {
    const double* a = facets_.data() + k * dim_;
    double up = 0.0;
    double down = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      const double x = a[i] * lo[i];
      const double y = a[i] * hi[i];
      up += std::max(x, y);
      down += std::min(x, y);
    }
    if (down > 0.0) g = std::max(g, down);
    if (up < 0.0) g = std::max(g, -up);
  }
  return g;
}

std::string NormSpec::describe() const {
  std::ostringstream os;
  auto p_text = [&] { return std::isinf(p_) ? std::string("inf") : (std::ostringstream() << p_).str(); };
  switch (kind_) {
    case NormKind::lp:
      os << "lp(p=" << p_text() << ", dim=" << dim_ << ")";
      break;
    case NormKind::weighted_lp:
      os << "wlp(p=" << p_text() << ", dim=" << dim_ << ")";
      break;
    case NormKind::polyhedral:
      os << "poly(vertices=" << vertices_.size() << ", facets=" << 2 * facet_count() << ", dim=" << dim_ << ")";
      break;
  }
  return os.str();
}

double norm_eval(const NormSpec& norm, std::span<const double> x) { return norm.eval(x); }

Point normalize(const NormSpec& norm, std::span<const double> x) {
  const double n = norm.eval(x);
  if (n == 0.0) throw Error(Errc::zero_vector, "cannot normalize the zero vector", "x");
  Point out(x.begin(), x.end());
  for (double& c : out) c /= n;
  return out;
}

}  // namespace remotal
