#include "rho_forge/smith_normal_form.hpp"

#include <algorithm>
#include <sstream>

namespace rho_forge {

using Eigen::Index;

std::string InvariantFactors::to_string() const {
  std::ostringstream os;
  os << "kernel_rank = " << kernel_rank << "; factors = [";
  for (size_t i = 0; i < factors.size(); ++i) os << (i ? ", " : "") << factors[i];
  os << "]";
  return os.str();
}

namespace {

// Row and column operations applied simultaneously to the working matrix and
// to the accumulated transforms.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const LaurentMatrix& m)
      : d(m), u(identity_matrix(m.rows())), v(identity_matrix(m.cols())) {}

  void swap_rows(Index a, Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    u.row(a).swap(u.row(b));
  }
  void swap_cols(Index a, Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    v.col(a).swap(v.col(b));
  }
  // row[dst] += c * row[src]
  void add_row(Index dst, Index src, const LaurentPoly& c) {
    for (Index j = 0; j < d.cols(); ++j) d(dst, j) += c * d(src, j);
    for (Index j = 0; j < u.cols(); ++j) u(dst, j) += c * u(src, j);
  }
  // col[dst] += c * col[src]
  void add_col(Index dst, Index src, const LaurentPoly& c) {
    for (Index i = 0; i < d.rows(); ++i) d(i, dst) += d(i, src) * c;
    for (Index i = 0; i < v.rows(); ++i) v(i, dst) += v(i, src) * c;
  }
  void scale_row(Index r, const LaurentPoly& unit) {
    for (Index j = 0; j < d.cols(); ++j) d(r, j) *= unit;
    for (Index j = 0; j < u.cols(); ++j) u(r, j) *= unit;
  }

  LaurentMatrix d;
  LaurentMatrix u;
  LaurentMatrix v;
};

// Nonzero entry of smallest span in the trailing block starting at (t, t).
bool find_pivot(const LaurentMatrix& d, Index t, Index& row, Index& col) {
  int best = -1;
  for (Index i = t; i < d.rows(); ++i)
    for (Index j = t; j < d.cols(); ++j) {
      const LaurentPoly& p = d(i, j);
      if (p.is_zero()) continue;
      if (best < 0 || p.span() < best || (p.span() == best && p.terms().size() < d(row, col).terms().size())) {
        best = p.span();
        row = i;
        col = j;
      }
    }
  return best >= 0;
}

}  // namespace

SmithDecomposition snf(const LaurentMatrix& m) {
  SmithWorkspace w(m);
  const Index steps = std::min(m.rows(), m.cols());
  Index nonzero = 0;
  for (Index t = 0; t < steps; ++t) {
    Index pr = t;
    Index pc = t;
    if (!find_pivot(w.d, t, pr, pc)) break;
    for (;;) {
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      bool clean = true;
      for (Index i = t + 1; i < w.d.rows(); ++i) {
        if (w.d(i, t).is_zero()) continue;
        auto [q, r] = divmod(w.d(i, t), w.d(t, t));
        w.add_row(i, t, -q);
        clean = clean && r.is_zero();
      }
      for (Index j = t + 1; j < w.d.cols(); ++j) {
        if (w.d(t, j).is_zero()) continue;
        auto [q, r] = divmod(w.d(t, j), w.d(t, t));
        w.add_col(j, t, -q);
        clean = clean && r.is_zero();
      }
      if (clean) {
        // Pivot must divide the whole trailing block; otherwise fold an offending row in.
        Index bad = -1;
        for (Index i = t + 1; i < w.d.rows() && bad < 0; ++i)
          for (Index j = t + 1; j < w.d.cols(); ++j)
            if (!divides(w.d(t, t), w.d(i, j))) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        w.add_row(t, bad, 1);
      }
      pr = t;
      pc = t;
      find_pivot(w.d, t, pr, pc);
    }
    const LaurentPoly& pivot = w.d(t, t);
    w.scale_row(t, LaurentPoly::monomial(-pivot.low_exponent(), pivot.leading_coeff().inverse()));
    ++nonzero;
  }

  SmithDecomposition out{std::move(w.u), std::move(w.d), std::move(w.v), {}};
  out.invariants.kernel_rank = m.cols() - nonzero;
  for (Index t = 0; t < nonzero; ++t)
    if (!out.d(t, t).is_unit()) out.invariants.factors.push_back(out.d(t, t));
  return out;
}

bool homology_compare(const HermitianLaurentMatrix& b1, const HermitianLaurentMatrix& b2) {
  return invariant_factors(b1.matrix()) == invariant_factors(b2.matrix());
}

}  // namespace rho_forge
