#include "matz.hpp"

namespace hyc {

MatZ identity_z(int n) {
  MatZ m(n, std::vector<Z>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatZ mul(const MatZ& a, const MatZ& b) {
  int n = (int)a.size(), k = (int)b.size(), m = k ? (int)b[0].size() : 0;
  MatZ c(n, std::vector<Z>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

MatZ transpose(const MatZ& a) {
  int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
  MatZ t(m, std::vector<Z>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

Z det(MatZ a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  Z prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MatQ to_q(const MatZ& a) {
  MatQ q(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) q[i].push_back(Q(x));
  return q;
}

int rank_q(MatQ a) {
  int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (int j = c; j < m; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

MatZ inv_unimodular(const MatZ& a) {
  int n = (int)a.size();
  MatQ aug(n, std::vector<Q>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Q(a[i][j]);
    aug[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (aug[i][c] != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("inv_unimodular: singular");
    std::swap(aug[c], aug[piv]);
    Q d = aug[c][c];
    for (int j = 0; j < 2 * n; ++j) aug[c][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Q f = aug[i][c];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  MatZ inv(n, std::vector<Z>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(aug[i][n + j]))
        throw std::invalid_argument("inv_unimodular: matrix not unimodular");
      inv[i][j] = num(aug[i][n + j]);
    }
  return inv;
}

Smith smith_normal_form(MatZ a) {
  int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
  Smith s{identity_z(n), identity_z(m), a};
  MatZ& d = s.d;

  auto row_op = [&](int i, int j, const Z& f) {  // row i -= f * row j
    for (int c = 0; c < m; ++c) d[i][c] -= f * d[j][c];
    for (int c = 0; c < n; ++c) s.u[i][c] -= f * s.u[j][c];
  };
  auto col_op = [&](int i, int j, const Z& f) {  // col i -= f * col j
    for (int r = 0; r < n; ++r) d[r][i] -= f * d[r][j];
    for (int r = 0; r < m; ++r) s.v[r][i] -= f * s.v[r][j];
  };
  auto row_swap = [&](int i, int j) { std::swap(d[i], d[j]); std::swap(s.u[i], s.u[j]); };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(d[r][i], d[r][j]);
    for (int r = 0; r < m; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  auto row_neg = [&](int i) {
    for (int c = 0; c < m; ++c) d[i][c] = -d[i][c];
    for (int c = 0; c < n; ++c) s.u[i][c] = -s.u[i][c];
  };

  int t = 0;
  while (t < n && t < m) {
    // find a pivot
    int pi = -1, pj = -1;
    for (int i = t; i < n && pi < 0; ++i)
      for (int j = t; j < m; ++j)
        if (d[i][j] != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        Z f = d[i][t] / d[t][t];
        row_op(i, t, f);
        if (d[i][t] != 0) { row_swap(t, i); again = true; }
      }
      for (int j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        Z f = d[t][j] / d[t][t];
        col_op(j, t, f);
        if (d[t][j] != 0) { col_swap(t, j); again = true; }
      }
    }
    if (d[t][t] < 0) row_neg(t);
    ++t;
  }
  // enforce the divisibility chain
  for (bool fixed = false; !fixed;) {
    fixed = true;
    for (int i = 0; i + 1 < t; ++i) {
      if (d[i + 1][i + 1] % d[i][i] == 0) continue;
      fixed = false;
      // fold d[i+1][i+1] into position (i,i) and re-reduce the 2x2 block
      col_op(i, i + 1, Z(-1));  // col i += col i+1 would be -(-1); keep sign simple
      // now d[i+1][i] = d[i+1][i+1], redo elimination from row i
      bool again = true;
      while (again) {
        again = false;
        for (int r = i + 1; r < n; ++r) {
          if (d[r][i] == 0) continue;
          Z f = d[r][i] / d[i][i];
          row_op(r, i, f);
          if (d[r][i] != 0) { row_swap(i, r); again = true; }
        }
        for (int c = i + 1; c < m; ++c) {
          if (d[i][c] == 0) continue;
          Z f = d[i][c] / d[i][i];
          col_op(c, i, f);
          if (d[i][c] != 0) { col_swap(i, c); again = true; }
        }
      }
      if (d[i][i] < 0) row_neg(i);
      if (d[i + 1][i + 1] < 0) row_neg(i + 1);
    }
  }
  return s;
}

}  // namespace hyc
