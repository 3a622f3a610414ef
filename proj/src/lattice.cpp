#include "latspec/lattice.hpp"

#include <algorithm>

namespace latspec {

namespace {

Int dot(const std::vector<Int>& u, const std::vector<Int>& v) {
  Int s = 0;
  for (size_t i = 0; i < u.size(); i++) s += u[i] * v[i];
  return s;
}

Int round_div(const Int& num, const Int& den) {
  // nearest integer to num/den, den > 0, ties toward +inf
  Int q = (2 * num + den) / (2 * den);
  if ((2 * num + den) < 0 && (2 * num + den) % (2 * den) != 0) q -= 1;
  return q;
}

Int round_rat(const Rat& r) {
  return round_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

// All-integer LLL state (Cohen, "A Course in Computational Algebraic
// Number Theory", alg. 2.6.3): dd[i+1] = det of the Gram matrix of the
// first i+1 vectors, lam[i][j] = dd[j+1] * mu_ij. Exact throughout.
struct IntegralLll {
  std::vector<std::vector<Int>>& b;
  unsigned n;
  std::vector<Int> dd;                 // dd[0] = 1
  std::vector<std::vector<Int>> lam;

  explicit IntegralLll(std::vector<std::vector<Int>>& rows)
      : b(rows), n(static_cast<unsigned>(rows.size())),
        dd(n + 1), lam(n, std::vector<Int>(n)) {
    dd[0] = 1;
    for (unsigned i = 0; i < n; i++) {
      for (unsigned j = 0; j <= i; j++) {
        Int u = dot(b[i], b[j]);
        for (unsigned k = 0; k < j; k++)
          u = (dd[k + 1] * u - lam[i][k] * lam[j][k]) / dd[k];
        if (j < i)
          lam[i][j] = u;
        else
          dd[i + 1] = u;
      }
      if (dd[i + 1] == 0) throw std::invalid_argument("lll_reduce: rows not independent");
    }
  }

  void size_reduce(unsigned k, unsigned l) {
    if (2 * abs(lam[k][l]) <= dd[l + 1]) return;
    Int q = round_div(lam[k][l], dd[l + 1]);
    for (unsigned i = 0; i < n; i++) b[k][i] -= q * b[l][i];
    lam[k][l] -= q * dd[l + 1];
    for (unsigned i = 0; i < l; i++) lam[k][i] -= q * lam[l][i];
  }

  void swap_rows(unsigned k) {
    std::swap(b[k], b[k - 1]);
    for (unsigned j = 0; j + 1 < k; j++) std::swap(lam[k][j], lam[k - 1][j]);
    Int lambda = lam[k][k - 1];
    Int bb = (dd[k - 1] * dd[k + 1] + lambda * lambda) / dd[k];
    for (unsigned i = k + 1; i < n; i++) {
      Int t = lam[i][k];
      lam[i][k] = (dd[k + 1] * lam[i][k - 1] - lambda * t) / dd[k];
      lam[i][k - 1] = (bb * t + lambda * lam[i][k]) / dd[k + 1];
    }
    dd[k] = bb;
  }

  void run(const Rat& delta) {
    if (delta <= Rat(1, 4) || delta >= 1)
      throw std::invalid_argument("lll_reduce: delta must be in (1/4, 1)");
    Int dn = boost::multiprecision::numerator(delta);
    Int de = boost::multiprecision::denominator(delta);
    unsigned k = 1;
    while (k < n) {
      size_reduce(k, k - 1);
      // Lovasz: swap iff d_k * d_{k-2} < delta * d_{k-1}^2 - lam^2
      if (de * dd[k + 1] * dd[k - 1] < dn * dd[k] * dd[k] - de * lam[k][k - 1] * lam[k][k - 1]) {
        swap_rows(k);
        k = std::max(k - 1, 1u);
      } else {
        for (unsigned l = k - 1; l-- > 0;) size_reduce(k, l);
        k++;
      }
    }
  }
};

// Exact rational Gram-Schmidt of an integer basis.
struct Gso {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;  // squared norms of the orthogonalized vectors
};

Gso gram_schmidt(const std::vector<std::vector<Int>>& rows) {
  unsigned n = static_cast<unsigned>(rows.size());
  Gso g{std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)), std::vector<Rat>(n)};
  std::vector<std::vector<Rat>> star(n, std::vector<Rat>(n));
  for (unsigned i = 0; i < n; i++) {
    for (unsigned k = 0; k < n; k++) star[i][k] = Rat(rows[i][k]);
    for (unsigned j = 0; j < i; j++) {
      Rat num = 0;
      for (unsigned k = 0; k < n; k++) num += Rat(rows[i][k]) * star[j][k];
      g.mu[i][j] = num / g.B[j];
      for (unsigned k = 0; k < n; k++) star[i][k] -= g.mu[i][j] * star[j][k];
    }
    Rat bn = 0;
    for (unsigned k = 0; k < n; k++) bn += star[i][k] * star[i][k];
    g.B[i] = bn;
  }
  return g;
}

struct EnumState {
  const std::vector<std::vector<Int>>& rows;
  const Gso& gso;
  unsigned n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  Int best;                   // current best squared norm (achieved)
  std::vector<Int> x;         // coefficient vector under construction
  std::vector<Int> best_x;
  bool exhausted = true;

  // Search levels i = n-1 .. 0; acc is the squared-norm contribution of
  // levels above i. Any vector strictly shorter than `best` satisfies
  // (x_i - c_i)^2 B_i + acc < best at every level.
  void descend(unsigned level, const Rat& acc) {
    if (++nodes > budget) {
      exhausted = false;
      return;
    }
    unsigned i = level;
    Rat c = 0;
    for (unsigned j = i + 1; j < n; j++) c -= Rat(x[j]) * gso.mu[j][i];
    Int r = round_rat(c);
    auto try_x = [&](const Int& xi) -> bool {  // false once out of bound
      Rat diff = Rat(xi) - c;
      Rat contrib = acc + diff * diff * gso.B[i];
      if (contrib >= Rat(best)) return false;
      x[i] = xi;
      if (i == 0) {
        bool nonzero = false;
        for (unsigned j = 0; j < n; j++)
          if (x[j] != 0) nonzero = true;
        if (nonzero) {
          // contrib is the exact squared norm; it is integral here
          best = boost::multiprecision::numerator(contrib) /
                 boost::multiprecision::denominator(contrib);
          best_x = x;
        }
      } else {
        descend(i - 1, contrib);
      }
      return exhausted;
    };
    for (Int xi = r;; xi++)
      if (!try_x(xi)) break;
    for (Int xi = r - 1;; xi--)
      if (!try_x(xi)) break;
    x[i] = 0;
  }
};

}  // namespace

DualBasis dual_basis_for_multiplier(const Int& multiplier, unsigned effective_exponent,
                                    unsigned d) {
  if (d < kMinDim || d > kMaxDim) throw std::invalid_argument("dimension out of range [2, 32]");
  DualBasis basis;
  basis.dim = d;
  basis.effective_modulus = Int(1) << effective_exponent;
  basis.rows.assign(d, std::vector<Int>(d, 0));
  basis.rows[0][0] = basis.effective_modulus;
  for (unsigned i = 1; i < d; i++) {
    basis.rows[i][0] = -mod_pow(multiplier, i, effective_exponent);
    basis.rows[i][i] = 1;
  }
  return basis;
}

DualBasis dual_basis(const GeneratorSpec& spec, unsigned d) {
  spec.validate();
  return dual_basis_for_multiplier(spec.a, spec.effective_exponent(), d);
}

DualBasis lll_reduce(const DualBasis& basis, const Rat& delta) {
  DualBasis out = basis;
  IntegralLll lll(out.rows);
  lll.run(delta);
  return out;
}

Int det_abs(const DualBasis& basis) {
  // Bareiss fraction-free elimination
  auto m = basis.rows;
  unsigned n = basis.dim;
  Int prev = 1;
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; k++) {
    if (m[k][k] == 0) {
      unsigned p = k + 1;
      while (p < n && m[p][k] == 0) p++;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; i++)
      for (unsigned j = k + 1; j < n; j++)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return abs(m[n - 1][n - 1]);
}

ShortVector shortest_vector(const DualBasis& basis, bool exact, std::uint64_t node_budget) {
  DualBasis reduced = lll_reduce(basis, default_delta());
  unsigned n = reduced.dim;
  unsigned best_row = 0;
  Int best_norm = dot(reduced.rows[0], reduced.rows[0]);
  for (unsigned i = 1; i < n; i++) {
    Int nn = dot(reduced.rows[i], reduced.rows[i]);
    if (nn < best_norm) {
      best_norm = nn;
      best_row = i;
    }
  }
  ShortVector sv;
  sv.coords = reduced.rows[best_row];
  sv.norm_sq = best_norm;
  sv.exact = false;
  if (!exact) return sv;

  Gso gso = gram_schmidt(reduced.rows);
  EnumState st{reduced.rows, gso, n, node_budget, 0, best_norm,
               std::vector<Int>(n, 0), {}, true};
  st.descend(n - 1, Rat(0));
  if (!st.exhausted) return sv;  // budget exceeded: approximate result
  if (!st.best_x.empty()) {
    std::vector<Int> w(n, 0);
    for (unsigned i = 0; i < n; i++)
      for (unsigned k = 0; k < n; k++) w[k] += st.best_x[i] * reduced.rows[i][k];
    sv.coords = w;
    sv.norm_sq = st.best;
  }
  sv.exact = true;
  return sv;
}

}  // namespace latspec
