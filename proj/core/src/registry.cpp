#include <algorithm>
#include <limits>

#include "catri/identities.hpp"
#include "catri/numbers.hpp"

namespace catri {

namespace {

using Q = Rational;

Q frac(std::int64_t num, std::int64_t den) { return Q(BigInt(num), BigInt(den)); }

BigInt sign_pow(std::int64_t k) { return BigInt(k % 2 == 0 ? 1 : -1); }

BigInt sq(const BigInt& x) { return x * x; }
BigInt cube(const BigInt& x) { return x * x * x; }

// Triangle entries extended by the binomial convention: the defining
// formula with binom(u, v) = 0 for v < 0 or v > u. Inside the row these are
// the memoized values; outside C vanishes, and B, A continue through C.
BigInt c_ext(const TriangleRow& row, std::int64_t k) {
  return row.has(k) ? row.at(k) : BigInt(0);
}

BigInt c_ext(std::int64_t m, std::int64_t k) {
  if (k < 0 || k > m) return BigInt(0);
  return c_row(m)->at(k);
}

BigInt b_ext(std::int64_t n, std::int64_t k) {
  if (k >= 0 && k <= n) return b_row(n)->at(k);
  return c_ext(2 * n, n - k);
}

BigInt a_ext(std::int64_t n, std::int64_t k) {
  if (k >= 1 && k <= n + 1) return a_row(n)->at(k);
  return c_ext(2 * n + 1, n + 1 - k);
}

// Single entry C(m,k) without building the whole row; used where m grows
// like k*n and full rows would be wasteful.
BigInt c_single(std::int64_t m, std::int64_t k) {
  if (k < 0 || k > m) return BigInt(0);
  return exact_div(BigInt(m - 2 * k) * binomial(m, k), BigInt(m));
}

// sum_{j=0}^{m-1} binom(j, n) binom(j, m-n-1)
BigInt amm_inner_sum(std::int64_t m, std::int64_t n) {
  BigInt s(0);
  for (std::int64_t j = 0; j <= m - 1; ++j) s += binomial(j, n) * binomial(j, m - n - 1);
  return s;
}

Parameter P(std::string name, std::int64_t hard_min, std::int64_t hypothesis_min,
            std::int64_t cap = 100) {
  return Parameter{std::move(name), hard_min, hypothesis_min, cap};
}

struct Builder {
  std::vector<IdentityDescriptor> out;

  void add(std::string id, std::string statement, std::vector<Parameter> params,
           std::string hypothesis_text, Evaluator lhs, Evaluator rhs,
           std::string anchor, std::function<bool(Cell)> relation = {}) {
    out.push_back(IdentityDescriptor{std::move(id), std::move(statement),
                                     std::move(params), std::move(relation),
                                     std::move(hypothesis_text), std::move(lhs),
                                     std::move(rhs), std::move(anchor)});
  }
};

void add_recurrences(Builder& b) {
  b.add("prop-recurrence", "C(m+2,k) = C(m,k) + 2 C(m,k-1) + C(m,k-2)",
        {P("m", 1, 1), P("k", 0, 2)}, "m >= 1, k >= 2",
        [](Cell c) { return Q(c_ext(c[0] + 2, c[1])); },
        [](Cell c) {
          auto row = c_row(c[0]);
          return Q(c_ext(*row, c[1]) + BigInt(2) * c_ext(*row, c[1] - 1) +
                   c_ext(*row, c[1] - 2));
        },
        "proposition: three-term recurrence of C(m,k)");

  b.add("rec-B", "B(n,k) = B(n-1,k-1) + 2 B(n-1,k) + B(n-1,k+1)",
        {P("n", 2, 2), P("k", 0, 2)}, "n >= 2, 2 <= k <= n",
        [](Cell c) { return Q(b_ext(c[0], c[1])); },
        [](Cell c) {
          auto n = c[0] - 1, k = c[1];
          return Q(b_ext(n, k - 1) + BigInt(2) * b_ext(n, k) + b_ext(n, k + 1));
        },
        "recurrence of the B Catalan triangle",
        [](Cell c) { return c[1] <= c[0]; });

  b.add("rec-A", "A(n,k) = A(n-1,k-1) + 2 A(n-1,k) + A(n-1,k+1)",
        {P("n", 2, 2), P("k", 0, 2)}, "n >= 2, 2 <= k <= n+1",
        [](Cell c) { return Q(a_ext(c[0], c[1])); },
        [](Cell c) {
          auto n = c[0] - 1, k = c[1];
          return Q(a_ext(n, k - 1) + BigInt(2) * a_ext(n, k) + a_ext(n, k + 1));
        },
        "recurrence of the A Catalan triangle",
        [](Cell c) { return c[1] <= c[0] + 1; });
}

void add_linear_sums(Builder& b) {
  b.add("thm-linear-sum", "sum_{k=0}^{n} C(m,k) = binom(m-1,n)",
        {P("m", 1, 2), P("n", 0, 1)}, "m >= 2, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += c_ext(*row, k);
          return Q(s);
        },
        [](Cell c) { return Q(binomial(c[0] - 1, c[1])); },
        "theorem on linear sums, item (i)");

  b.add("thm-alt-sum", "sum_{k=0}^{n} (-1)^k C(m,k) = (-1)^n C(m-1,n)",
        {P("m", 2, 2), P("n", 0, 1)}, "m >= 2, 1 <= n <= m-1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += sign_pow(k) * c_ext(*row, k);
          return Q(s);
        },
        [](Cell c) { return Q(sign_pow(c[1]) * c_ext(c[0] - 1, c[1])); },
        "theorem on linear sums, item (ii)",
        [](Cell c) { return c[1] <= c[0] - 1; });

  b.add("cor-alt-B", "sum_{k=1}^{n} (-1)^k B(n,k) = -C_{n-1}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += sign_pow(k) * row->at(k);
          return Q(s);
        },
        [](Cell c) { return Q(-catalan(c[0] - 1)); },
        "corollary on alternating sums, item (i)");

  b.add("cor-alt-A", "sum_{k=1}^{n+1} (-1)^k A(n,k) = 0",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += sign_pow(k) * row->at(k);
          return Q(s);
        },
        [](Cell) { return Q(0); },
        "corollary on alternating sums, item (ii)");

  b.add("eq-linear-B", "sum_{k=1}^{n} B(n,k) = (n+1)/2 C_n",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += row->at(k);
          return Q(s);
        },
        [](Cell c) { return frac(c[0] + 1, 2) * Q(catalan(c[0])); },
        "linear sum of the B triangle rows");

  b.add("eq-linear-A", "sum_{k=1}^{n+1} A(n,k) = (n+1) C_n",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += row->at(k);
          return Q(s);
        },
        [](Cell c) { return Q(BigInt(c[0] + 1) * catalan(c[0])); },
        "linear sum of the A triangle rows");

  b.add("eq-square-B", "sum_{k=1}^{n} B(n,k)^2 = C_{2n-1}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += sq(row->at(k));
          return Q(s);
        },
        [](Cell c) { return Q(catalan(2 * c[0] - 1)); },
        "sum of squares of the B triangle rows");

  b.add("eq-square-A", "sum_{k=1}^{n+1} A(n,k)^2 = C_{2n}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += sq(row->at(k));
          return Q(s);
        },
        [](Cell c) { return Q(catalan(2 * c[0])); },
        "sum of squares of the A triangle rows");

  b.add("eq-convolution",
        "sum_{k=1}^{i} B(n,k) B(n,n+k-i) (n+2k-i) = (n+1) C_n binom(2(n-1), i-1)",
        {P("n", 1, 1, 40), P("i", 0, 1, 40)}, "n >= 1, 1 <= i <= n",
        [](Cell c) {
          auto n = c[0], i = c[1];
          BigInt s(0);
          for (std::int64_t k = 1; k <= i; ++k) {
            s += b_ext(n, k) * b_ext(n, n + k - i) * BigInt(n + 2 * k - i);
          }
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0], i = c[1];
          return Q(BigInt(n + 1) * catalan(n) * binomial(2 * (n - 1), i - 1));
        },
        "weighted convolution of B rows",
        [](Cell c) { return c[1] <= c[0]; });
}

void add_square_sums(Builder& b) {
  b.add("thm-square-sum",
        "sum_{k=0}^{n} C(m,k)^2 = (m-2n)/m binom(m-1,n)^2 + 2/m sum_{k=0}^{n-1} binom(m-1,k)^2",
        {P("m", 1, 1), P("n", 0, 1)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += sq(c_ext(*row, k));
          return Q(s);
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt tail(0);
          for (std::int64_t k = 0; k <= n - 1; ++k) tail += sq(binomial(m - 1, k));
          return frac(m - 2 * n, m) * Q(sq(binomial(m - 1, n))) + frac(2, m) * Q(tail);
        },
        "theorem on sums of squares, item (i)");

  b.add("thm-alt-square-sum",
        "sum_{k=0}^{n} (-1)^k C(m,k)^2 = 2 (-1)^n binom(m-1,n)^2 - sum_{k=0}^{n} (-1)^k binom(m,k)^2",
        {P("m", 1, 1), P("n", 0, 1)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += sign_pow(k) * sq(c_ext(*row, k));
          return Q(s);
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt alt(0);
          for (std::int64_t k = 0; k <= n; ++k) alt += sign_pow(k) * sq(binomial(m, k));
          return Q(BigInt(2) * sign_pow(n) * sq(binomial(m - 1, n)) - alt);
        },
        "theorem on sums of squares, item (ii)");

  b.add("cor-square-i", "sum_{k=0}^{n} C(n,k)^2 = 2 C_{n-1}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[0]; ++k) s += sq(row->at(k));
          return Q(s);
        },
        [](Cell c) { return Q(BigInt(2) * catalan(c[0] - 1)); },
        "corollary on sums of squares, item (i)");

  b.add("cor-square-ii", "sum_{k=1}^{n} B(n,k)^2 = C_{2n-1}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += sq(c_ext(2 * c[0], c[0] - k));
          return Q(s);
        },
        [](Cell c) { return Q(catalan(2 * c[0] - 1)); },
        "corollary on sums of squares, item (ii)");

  b.add("cor-square-iii", "sum_{k=1}^{n+1} A(n,k)^2 = C_{2n}",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[0]; ++k) s += sq(c_ext(2 * c[0] + 1, k));
          return Q(s);
        },
        [](Cell c) { return Q(catalan(2 * c[0])); },
        "corollary on sums of squares, item (iii)");

  b.add("cor-square-iv", "sum_{k=1}^{n} (-1)^k B(n,k)^2 = -(n+1)/2 C_n",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += sign_pow(k) * sq(row->at(k));
          return Q(s);
        },
        [](Cell c) { return -frac(c[0] + 1, 2) * Q(catalan(c[0])); },
        "corollary on sums of squares, item (iv)");

  b.add("thm-square-decomp-i",
        "binom(m,n)^2 = sum_{j=n}^{m} (2j-n)/n binom(j-1,n-1)^2",
        {P("m", 0, 1), P("n", 1, 1)}, "m >= n >= 1",
        [](Cell c) { return Q(sq(binomial(c[0], c[1]))); },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt weighted(0);
          for (std::int64_t j = n; j <= m; ++j) {
            weighted += BigInt(2 * j - n) * sq(binomial(j - 1, n - 1));
          }
          return Q(weighted, BigInt(n));
        },
        "square decomposition theorem, item (i)",
        [](Cell c) { return c[0] >= c[1]; });

  b.add("thm-square-decomp-ii",
        "binom(2n,n)^2 = sum_{k=0}^{n} (3n-2k)/n binom(2n-1-k,n-1)^2",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) { return Q(sq(binomial(2 * c[0], c[0]))); },
        [](Cell c) {
          auto n = c[0];
          BigInt weighted(0);
          for (std::int64_t k = 0; k <= n; ++k) {
            weighted += BigInt(3 * n - 2 * k) * sq(binomial(2 * n - 1 - k, n - 1));
          }
          return Q(weighted, BigInt(n));
        },
        "square decomposition theorem, item (ii)");

  b.add("thm-square-decomp-remark",
        "binom(2n,n)^2 = sum_{j=0}^{n} (n+2j)/n binom(n-1+j,n-1)^2",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) { return Q(sq(binomial(2 * c[0], c[0]))); },
        [](Cell c) {
          auto n = c[0];
          BigInt weighted(0);
          for (std::int64_t j = 0; j <= n; ++j) {
            weighted += BigInt(n + 2 * j) * sq(binomial(n - 1 + j, n - 1));
          }
          return Q(weighted, BigInt(n));
        },
        "remark after the square decomposition theorem");

  b.add("eq-vandermonde", "sum_{k=0}^{n} binom(n,k)^2 = binom(2n,n)",
        {P("n", 0, 0)}, "n >= 0",
        [](Cell c) {
          auto row = binomial_row(c[0]);
          BigInt s(0);
          for (const auto& x : *row) s += sq(x);
          return Q(s);
        },
        [](Cell c) { return Q(binomial(2 * c[0], c[0])); },
        "Vandermonde's identity");

  b.add("eq-alt-square", "sum_{k=0}^{2n} (-1)^k binom(2n,k)^2 = (-1)^n binom(2n,n)",
        {P("n", 0, 0)}, "n >= 0",
        [](Cell c) {
          auto row = binomial_row(2 * c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= 2 * c[0]; ++k) {
            s += sign_pow(k) * sq((*row)[static_cast<std::size_t>(k)]);
          }
          return Q(s);
        },
        [](Cell c) { return Q(sign_pow(c[0]) * binomial(2 * c[0], c[0])); },
        "alternating Vandermonde identity");
}

void add_cube_sums(Builder& b) {
  b.add("eq-amm",
        "sum_{k=0}^{n} (m-2k) binom(m,k)^3 = (m-n) binom(m,n) sum_{j=0}^{m-1} binom(j,n) binom(j,m-n-1)",
        {P("m", 0, 1, 40), P("n", 0, 1, 40)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto m = c[0], n = c[1];
          auto row = binomial_row(m);
          BigInt s(0);
          for (std::int64_t k = 0; k <= std::min(n, m); ++k) {
            s += BigInt(m - 2 * k) * cube((*row)[static_cast<std::size_t>(k)]);
          }
          return Q(s);
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          return Q(BigInt(m - n) * binomial(m, n) * amm_inner_sum(m, n));
        },
        "weighted cube-sum identity used for the cube sums");

  b.add("thm-cube-sum",
        "sum_{k=0}^{n} C(m,k)^3 = 4 binom(m-1,n)^3 - 3 binom(m-1,n) sum_{j=0}^{m-1} binom(j,n) binom(j,m-n-1)",
        {P("m", 1, 1, 40), P("n", 0, 1, 40)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += cube(c_ext(*row, k));
          return Q(s);
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt top = binomial(m - 1, n);
          return Q(BigInt(4) * cube(top) - BigInt(3) * top * amm_inner_sum(m, n));
        },
        "theorem on sums of cubes, item (i)");

  b.add("thm-alt-cube-sum",
        "sum_{k=0}^{n} (-1)^k C(m,k)^3 = (m-3n)/m (-1)^n binom(m-1,n)^3 - (m-3)/m sum_{k=0}^{n-1} (-1)^k binom(m-1,k)^3",
        {P("m", 1, 1), P("n", 0, 1)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[1]; ++k) s += sign_pow(k) * cube(c_ext(*row, k));
          return Q(s);
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt tail(0);
          for (std::int64_t k = 0; k <= n - 1; ++k) tail += sign_pow(k) * cube(binomial(m - 1, k));
          return frac(m - 3 * n, m) * Q(sign_pow(n) * cube(binomial(m - 1, n))) -
                 frac(m - 3, m) * Q(tail);
        },
        "theorem on sums of cubes, item (ii)");

  b.add("cor-cube-B",
        "sum_{k=0}^{n} B(n,k)^3 = 1/2 binom(2n,n)^3 - 3/2 binom(2n,n) sum_{j=n}^{2n-1} binom(j,n) binom(j,n-1)",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= c[0]; ++k) s += cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          BigInt central = binomial(2 * n, n);
          BigInt inner(0);
          for (std::int64_t j = n; j <= 2 * n - 1; ++j) inner += binomial(j, n) * binomial(j, n - 1);
          return frac(1, 2) * Q(cube(central)) - frac(3, 2) * Q(central * inner);
        },
        "corollary on cube sums, item (i)");

  b.add("cor-cube-A",
        "sum_{k=1}^{n+1} A(n,k)^3 = binom(2n,n)^3 - 3 binom(2n,n) sum_{j=n}^{2n-1} binom(j,n)^2",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          BigInt central = binomial(2 * n, n);
          BigInt inner(0);
          for (std::int64_t j = n; j <= 2 * n - 1; ++j) inner += sq(binomial(j, n));
          return Q(cube(central) - BigInt(3) * central * inner);
        },
        "corollary on cube sums, item (ii)");

  b.add("cor-alt-cube-A",
        "sum_{k=1}^{n+1} (-1)^k A(n,k)^3 = (n-1)/(2n+1) binom(2n,n) binom(3n,n)",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += sign_pow(k) * cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          return frac(n - 1, 2 * n + 1) * Q(binomial(2 * n, n) * binomial(3 * n, n));
        },
        "corollary on cube sums, item (iii)");

  b.add("eq-dixon",
        "sum_{k=0}^{2n} (-1)^k binom(2n,k)^3 = (-1)^n binom(2n,n) binom(3n,n)",
        {P("n", 0, 1)}, "n >= 1",
        [](Cell c) {
          auto row = binomial_row(2 * c[0]);
          BigInt s(0);
          for (std::int64_t k = 0; k <= 2 * c[0]; ++k) {
            s += sign_pow(k) * cube((*row)[static_cast<std::size_t>(k)]);
          }
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          return Q(sign_pow(n) * binomial(2 * n, n) * binomial(3 * n, n));
        },
        "Dixon's identity");

  b.add("thm-b-cube",
        "sum_{k=1}^{n} B(n,k)^3 = 1/(2n) binom(2n,n) sum_{k=1}^{n} k binom(2n-k-1,n-1)^2",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          BigInt inner(0);
          for (std::int64_t k = 1; k <= n; ++k) {
            inner += BigInt(k) * sq(binomial(2 * n - k - 1, n - 1));
          }
          return frac(1, 2 * n) * Q(binomial(2 * n, n) * inner);
        },
        "theorem: closed form of the B cube sum");

  b.add("rem-b-cube-factored", "sum_{k=1}^{n} B(n,k)^3 = (n+1)/2 C_n b(n)",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = b_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          return frac(n + 1, 2) * Q(catalan(n) * seq_b(n));
        },
        "remark: B cube sum through b(n)");

  b.add("rem-a-cube-factored",
        "sum_{k=1}^{n+1} A(n,k)^3 = (n+1) C_n ((2(n+1) C_n)^2 - 3 a(n))",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = a_row(c[0]);
          BigInt s(0);
          for (std::int64_t k = 1; k <= c[0] + 1; ++k) s += cube(row->at(k));
          return Q(s);
        },
        [](Cell c) {
          auto n = c[0];
          BigInt scaled = BigInt(n + 1) * catalan(n);
          return Q(scaled * (sq(BigInt(2) * scaled) - BigInt(3) * seq_a(n)));
        },
        "remark: A cube sum through a(n)");
}

void add_harmonic(Builder& b) {
  b.add("thm-harmonic",
        "sum_{k=1}^{n} C(m,k) H_k = binom(m-1,n) H_n - 1/m sum_{k=1}^{n} binom(m,k)",
        {P("m", 1, 1), P("n", 1, 1)}, "m >= 1, n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          Q s(0);
          for (std::int64_t k = 1; k <= c[1]; ++k) {
            BigInt entry = c_ext(*row, k);
            if (!entry.is_zero()) s += Q(entry) * harmonic(k);
          }
          return s;
        },
        [](Cell c) {
          auto m = c[0], n = c[1];
          BigInt partial(0);
          for (std::int64_t k = 1; k <= n; ++k) partial += binomial(m, k);
          return Q(binomial(m - 1, n)) * harmonic(n) - Q(partial, BigInt(m));
        },
        "theorem: harmonic-weighted sum of C(m,k)");

  b.add("cor-harmonic-C", "sum_{k=1}^{n} C(n,k) H_k = (1-2^n)/n",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto row = c_row(c[0]);
          Q s(0);
          for (std::int64_t k = 1; k <= c[0]; ++k) s += Q(row->at(k)) * harmonic(k);
          return s;
        },
        [](Cell c) {
          auto n = c[0];
          return Q(BigInt(1) - pow(BigInt(2), static_cast<unsigned>(n)), BigInt(n));
        },
        "harmonic corollary, item (i)");

  b.add("cor-harmonic-B",
        "sum_{k=0}^{n-1} B(n,k) H_{n-k} = (2n H_n - 1)/(4n) binom(2n,n) - (2^{2n-1}-1)/(2n)",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto n = c[0];
          auto row = b_row(n);
          Q s(0);
          for (std::int64_t k = 0; k <= n - 1; ++k) s += Q(row->at(k)) * harmonic(n - k);
          return s;
        },
        [](Cell c) {
          auto n = c[0];
          Q lead = (Q(2 * n) * harmonic(n) - Q(1)) / Q(4 * n);
          Q tail(pow(BigInt(2), static_cast<unsigned>(2 * n - 1)) - BigInt(1), BigInt(2 * n));
          return lead * Q(binomial(2 * n, n)) - tail;
        },
        "harmonic corollary, item (ii)");

  b.add("cor-harmonic-A",
        "sum_{k=1}^{n} A(n,k) H_{n-k+1} = H_n binom(2n,n) - (2^{2n}-1)/(2n+1)",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto n = c[0];
          auto row = a_row(n);
          Q s(0);
          for (std::int64_t k = 1; k <= n; ++k) s += Q(row->at(k)) * harmonic(n - k + 1);
          return s;
        },
        [](Cell c) {
          auto n = c[0];
          Q tail(pow(BigInt(2), static_cast<unsigned>(2 * n)) - BigInt(1), BigInt(2 * n + 1));
          return harmonic(n) * Q(binomial(2 * n, n)) - tail;
        },
        "harmonic corollary, item (iii)");

  b.add("rem-ps13", "sum_{k=1}^{n} (n-2k) H_k binom(n,k) = 1 - 2^n",
        {P("n", 1, 1)}, "n >= 1",
        [](Cell c) {
          auto n = c[0];
          auto row = binomial_row(n);
          Q s(0);
          for (std::int64_t k = 1; k <= n; ++k) {
            s += Q(BigInt(n - 2 * k) * (*row)[static_cast<std::size_t>(k)]) * harmonic(k);
          }
          return s;
        },
        [](Cell c) {
          return Q(BigInt(1) - pow(BigInt(2), static_cast<unsigned>(c[0])));
        },
        "remark: classical harmonic binomial sum");
}

void add_relations(Builder& b) {
  b.add("rel-gen-catalan", "C(kn+1,n) = ((k-2)n+1) kC_n",
        {P("k", 1, 1), P("n", 1, 1)}, "k >= 1, n >= 1",
        [](Cell c) { return Q(c_single(c[0] * c[1] + 1, c[1])); },
        [](Cell c) {
          auto k = c[0], n = c[1];
          return Q(BigInt((k - 2) * n + 1) * gen_catalan(k, n));
        },
        "relation to generalized Catalan numbers");
}

std::vector<IdentityDescriptor> build_registry() {
  Builder b;
  add_recurrences(b);
  add_linear_sums(b);
  add_square_sums(b);
  add_cube_sums(b);
  add_harmonic(b);
  add_relations(b);
  return std::move(b.out);
}

}  // namespace

std::size_t IdentityDescriptor::parameter_index(std::string_view name) const {
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (parameters[i].name == name) return i;
  }
  return std::string_view::npos;
}

bool IdentityDescriptor::evaluable(Cell cell) const {
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (cell[i] < parameters[i].hard_min) return false;
  }
  return true;
}

bool IdentityDescriptor::satisfies_hypotheses(Cell cell) const {
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (cell[i] < std::max(parameters[i].hard_min, parameters[i].hypothesis_min)) {
      return false;
    }
  }
  return !relation || relation(cell);
}

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> registry = build_registry();
  return registry;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto& d : list_identities()) {
    if (d.id == id) return d;
  }
  std::string known;
  for (const auto& d : list_identities()) known += (known.empty() ? "" : ", ") + d.id;
  throw UnknownIdentityError("unknown identity '" + std::string(id) +
                             "'; valid ids: " + known);
}

std::pair<Rational, Rational> evaluate_sides(std::string_view id,
                                             const Assignment& assignment,
                                             bool allow_outside_domain) {
  const auto& identity = find_identity(id);
  std::vector<std::int64_t> cell;
  for (const auto& p : identity.parameters) {
    auto it = assignment.find(p.name);
    if (it == assignment.end()) {
      throw ConstraintViolation(identity.id + ": missing parameter '" + p.name + "'");
    }
    cell.push_back(it->second);
  }
  for (const auto& [name, value] : assignment) {
    if (identity.parameter_index(name) == std::string_view::npos) {
      throw ConstraintViolation(identity.id + ": unknown parameter '" + name + "'");
    }
  }
  if (!identity.admissible(cell, allow_outside_domain)) {
    throw ConstraintViolation(identity.id + ": assignment violates " +
                              (allow_outside_domain ? std::string("evaluation bounds")
                                                    : identity.hypothesis_text));
  }
  return {identity.lhs(cell), identity.rhs(cell)};
}

}  // namespace catri
