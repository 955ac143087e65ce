#include "cyclift/int_linalg.hpp"

#include <algorithm>
#include <utility>

#include "cyclift/errors.hpp"

namespace cyclift {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw InputError("matrix dimensions must be nonnegative");
  }
  entries_.resize(static_cast<std::size_t>(rows) * cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InputError("matrix entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InputError("matrix product dimension mismatch");
  }
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) {
        continue;
      }
      for (int j = 0; j < rhs.cols_; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out += ", ";
      }
      out += m(i, j).str();
    }
    out += "]";
  }
  out += "]";
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("determinant needs a square matrix");
  }
  const int n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) {
        return 0;
      }
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(pivot, j));
      }
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Int> SnfResult::diagonal() const {
  const int k = std::min(D.rows(), D.cols());
  std::vector<Int> diag;
  diag.reserve(k);
  for (int i = 0; i < k; ++i) {
    diag.push_back(D(i, i));
  }
  return diag;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) {
    std::swap(m(a, j), m(b, j));
  }
}

void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) {
    std::swap(m(i, a), m(i, b));
  }
}

// row a += f * row b
void add_row(IntMatrix& m, int a, int b, const Int& f) {
  for (int j = 0; j < m.cols(); ++j) {
    m(a, j) += f * m(b, j);
  }
}

// col a += f * col b
void add_col(IntMatrix& m, int a, int b, const Int& f) {
  for (int i = 0; i < m.rows(); ++i) {
    m(i, a) += f * m(i, b);
  }
}

void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) {
    m(a, j) = -m(a, j);
  }
}

// Smallest nonzero |entry| of D in the submatrix starting at (k, k),
// row-major tie-break. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int k, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = k; i < d.rows(); ++i) {
    for (int j = k; j < d.cols(); ++j) {
      if (d(i, j) == 0) {
        continue;
      }
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

void verify_snf(const IntMatrix& m, const SnfResult& r) {
  if (!(r.U * m * r.V == r.D)) {
    throw InvariantViolation("smith normal form: U*M*V != D");
  }
  const Int du = determinant(r.U);
  const Int dv = determinant(r.V);
  if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) {
    throw InvariantViolation("smith normal form: transform not unimodular");
  }
  const int k = std::min(r.D.rows(), r.D.cols());
  for (int i = 0; i < r.D.rows(); ++i) {
    for (int j = 0; j < r.D.cols(); ++j) {
      if (i != j && r.D(i, j) != 0) {
        throw InvariantViolation("smith normal form: D not diagonal");
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    if (r.D(i, i) < 0) {
      throw InvariantViolation("smith normal form: negative diagonal entry");
    }
    if (i + 1 < k) {
      const Int& a = r.D(i, i);
      const Int& b = r.D(i + 1, i + 1);
      if (a == 0 ? b != 0 : b % a != 0) {
        throw InvariantViolation("smith normal form: divisibility chain broken");
      }
    }
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int steps = std::min(rows, cols);
  SnfResult r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = r.D;

  for (int k = 0; k < steps; ++k) {
    int pi = 0;
    int pj = 0;
    if (!find_pivot(d, k, pi, pj)) {
      break;  // remaining submatrix is zero
    }
    while (true) {
      if (pi != k) {
        swap_rows(d, k, pi);
        swap_rows(r.U, k, pi);
      }
      if (pj != k) {
        swap_cols(d, k, pj);
        swap_cols(r.V, k, pj);
      }
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (d(i, k) != 0) {
          const Int q = d(i, k) / d(k, k);
          if (q != 0) {
            add_row(d, i, k, -q);
            add_row(r.U, i, k, -q);
          }
          if (d(i, k) != 0) {
            clean = false;
          }
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (d(k, j) != 0) {
          const Int q = d(k, j) / d(k, k);
          if (q != 0) {
            add_col(d, j, k, -q);
            add_col(r.V, j, k, -q);
          }
          if (d(k, j) != 0) {
            clean = false;
          }
        }
      }
      if (!clean) {
        // remainders became the new smallest entries; re-pivot
        find_pivot(d, k, pi, pj);
        continue;
      }
      // pivot is lone; ensure it divides the rest of the submatrix
      bool divides = true;
      for (int i = k + 1; i < rows && divides; ++i) {
        for (int j = k + 1; j < cols && divides; ++j) {
          if (d(i, j) % d(k, k) != 0) {
            add_row(d, k, i, 1);
            add_row(r.U, k, i, 1);
            divides = false;
          }
        }
      }
      if (divides) {
        break;
      }
      find_pivot(d, k, pi, pj);
    }
    if (d(k, k) < 0) {
      negate_row(d, k);
      negate_row(r.U, k);
    }
  }

  verify_snf(m, r);
  return r;
}

std::vector<Int> invariant_factors(const IntMatrix& m, int pad_to) {
  const SnfResult r = smith_normal_form(m);
  std::vector<Int> factors;
  for (Int& v : r.diagonal()) {
    if (v != 0) {
      factors.push_back(std::move(v));
    }
  }
  if (static_cast<int>(factors.size()) > pad_to) {
    throw PadTooShort("pad length " + std::to_string(pad_to) + " < " +
                      std::to_string(factors.size()) + " nonzero invariant factors");
  }
  factors.resize(pad_to, Int(0));
  return factors;
}

namespace {

// g = gcd(a, b) and x, y with a x + b y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  const Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long mod_ll(const Int& v, long long n) {
  Int r = v % n;
  if (r < 0) {
    r += n;
  }
  return r.convert_to<long long>();
}

}  // namespace

Int CongruenceSolutionSet::cardinality() const {
  if (!solvable()) {
    return 0;
  }
  Int card = 1;
  for (const auto& bv : basis) {
    card *= bv.period;
  }
  return card;
}

std::vector<std::vector<long long>> CongruenceSolutionSet::materialize(
    std::size_t max_size) const {
  if (!solvable()) {
    return {};
  }
  const Int card = cardinality();
  if (card > max_size) {
    throw CountExceedsLimit(card.str());
  }
  const std::size_t g = particular->size();
  std::vector<std::vector<long long>> out;
  out.reserve(card.convert_to<std::size_t>());
  std::vector<long long> ticks(basis.size(), 0);
  while (true) {
    std::vector<long long> x = *particular;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (ticks[k] == 0) {
        continue;
      }
      for (std::size_t i = 0; i < g; ++i) {
        x[i] = mod_ll(Int(x[i]) + Int(ticks[k]) * basis[k].vec[i], modulus);
      }
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    for (; k < ticks.size(); ++k) {
      if (++ticks[k] < basis[k].period) {
        break;
      }
      ticks[k] = 0;
    }
    if (k == ticks.size()) {
      break;
    }
  }
  return out;
}

CongruenceSolutionSet solve_congruences(const IntMatrix& H, const std::vector<Int>& b,
                                        long long n) {
  const int g = H.rows();
  if (H.cols() != g) {
    throw InputError("congruence system needs a square matrix");
  }
  if (static_cast<int>(b.size()) != g) {
    throw InputError("right-hand side length does not match matrix");
  }
  if (n < 2) {
    throw InputError("modulus must be >= 2");
  }

  const SnfResult snf = smith_normal_form(H);

  // c = U * (-b) mod n
  std::vector<Int> c(g, 0);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      c[i] -= snf.U(i, j) * b[j];
    }
  }

  CongruenceSolutionSet set;
  set.modulus = n;

  // Solve D_ii y_i = c_i (mod n) coordinatewise; gcd(0, n) = n.
  std::vector<long long> y(g, 0);
  std::vector<long long> periods(g, 1);
  for (int i = 0; i < g; ++i) {
    const Int gd_big = gcd(snf.D(i, i), Int(n));
    const long long gd = gd_big.convert_to<long long>();
    const long long ci = mod_ll(c[i], n);
    if (ci % gd != 0) {
      return set;  // unsolvable, particular stays absent
    }
    if (snf.D(i, i) == 0) {
      y[i] = 0;  // any value works
      periods[i] = n;
      continue;
    }
    const long long a = mod_ll(snf.D(i, i), n);
    const long long nred = n / gd;
    if (nred == 1) {
      y[i] = 0;
      periods[i] = gd;  // = n; all residues solve
      continue;
    }
    Int x0, y0;
    ext_gcd(Int(a / gd), Int(nred), x0, y0);
    y[i] = mod_ll(Int(ci / gd) * x0, nred);
    periods[i] = gd;
  }

  // Transport back: x = V y mod n; homogeneous generators are the columns
  // of V scaled by n / period.
  std::vector<long long> particular(g, 0);
  for (int i = 0; i < g; ++i) {
    Int acc = 0;
    for (int j = 0; j < g; ++j) {
      acc += snf.V(i, j) * y[j];
    }
    particular[i] = mod_ll(acc, n);
  }
  set.particular = std::move(particular);

  for (int j = 0; j < g; ++j) {
    if (periods[j] <= 1) {
      continue;
    }
    const long long step = n / periods[j];
    CongruenceSolutionSet::BasisVector bv;
    bv.period = periods[j];
    bv.vec.resize(g);
    for (int i = 0; i < g; ++i) {
      bv.vec[i] = mod_ll(snf.V(i, j) * step, n);
    }
    set.basis.push_back(std::move(bv));
  }
  return set;
}

}  // namespace cyclift
