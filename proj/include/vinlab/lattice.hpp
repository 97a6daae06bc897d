#pragma once

#include "vinlab/matrix.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace vinlab {

// Gram blocks for the standard negative definite root lattices. Adjacent
// simple roots have product +1 (the whole form is negated relative to the
// usual positive definite convention).
inline IntMat gram_A(int n) {
  require(n >= 1, "A_n needs n >= 1");
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return g;
}

inline IntMat gram_D(int n) {
  require(n >= 2, "D_n needs n >= 2");
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  if (n == 2) return g;  // D_2 = A_1^2
  for (int i = 0; i + 1 < n - 1; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
  return g;
}

inline IntMat gram_E(int n) {
  require(n >= 6 && n <= 8, "E_n needs n in {6,7,8}");
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (int i = 0; i + 1 < n - 1; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(2, n - 1) = g(n - 1, 2) = 1;  // branch node
  return g;
}

inline IntMat gram_U(const Int& n = 1) {
  IntMat g(2, 2);
  g(0, 1) = g(1, 0) = n;
  return g;
}

inline IntMat gram_I(int p, int q) {
  IntMat g(p + q, p + q);
  for (int i = 0; i < p; ++i) g(i, i) = 1;
  for (int i = p; i < p + q; ++i) g(i, i) = -1;
  return g;
}

struct Lattice {
  IntMat gram;
  std::vector<std::string> basis_labels;
  std::string expr;  // source expression when built from one

  int rank() const { return gram.rows(); }

  Inertia signature() const {
    if (!sig_) sig_ = inertia(gram);
    return *sig_;
  }

  bool is_even() const {
    for (int i = 0; i < rank(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }

  bool is_hyperbolic() const {
    Inertia s = signature();
    return s.pos == 1 && s.zero == 0;
  }

  Int norm(const IntVec& v) const { return inner(gram, v, v); }
  Int product(const IntVec& v, const IntVec& w) const { return inner(gram, v, w); }

 private:
  mutable std::optional<Inertia> sig_;
};

// gcd of the products of v with a basis; the positive generator of v.S.
inline Int divisibility(const Lattice& l, const IntVec& v) {
  require(!is_zero(v), "divisibility of the zero vector");
  return gcd_vec(mul(l.gram, v));
}

// Roots of an even 2-elementary lattice: norm -2, or norm -4 with
// divisibility 2.
inline bool is_root(const Lattice& l, const IntVec& v) {
  Int n = l.norm(v);
  if (n == -2) return true;
  if (n == -4) return divisibility(l, v) == 2;
  return false;
}

// Reflection in a root: x - 2 (x.a / a.a) a, integral for both root norms.
inline IntVec reflect(const Lattice& l, const IntVec& root, const IntVec& x) {
  Int n = l.norm(root);
  Int p = l.product(x, root);
  Int c2 = 2 * p;
  require(c2 % n == 0, "reflection is not integral");
  return sub(x, scale(root, c2 / n));
}

// ---------------------------------------------------------------------------
// Lattice expression parser.
// Grammar: summands joined by '+'; tokens U, U(n), An, Dn, En, I{p,q} with an
// optional '(m)' scale suffix; aliases Bn(2) = A1^n, Cn = Dn, F4 = D4.
// An optional '^k' repeats a summand. Whitespace is ignored.
// ---------------------------------------------------------------------------

namespace detail {

struct TokenLattice {
  IntMat gram;
  std::string label_stem;
};

inline void parse_fail(const std::string& expr, const std::string& why) {
  throw Error("cannot parse lattice expression '" + expr + "': " + why);
}

inline TokenLattice parse_token(const std::string& tok, const std::string& expr) {
  size_t pos = 0;
  auto peek = [&]() -> char { return pos < tok.size() ? tok[pos] : '\0'; };
  auto read_int = [&]() -> long {
    size_t start = pos;
    while (pos < tok.size() && std::isdigit(tok[pos])) ++pos;
    if (start == pos) parse_fail(expr, "expected a number in '" + tok + "'");
    return std::stol(tok.substr(start, pos - start));
  };

  char head = peek();
  if (!head) parse_fail(expr, "empty summand");
  ++pos;

  IntMat g;
  long sub = 0;
  std::string stem(1, head);
  bool b_alias = false;
  switch (head) {
    case 'U':
      g = gram_U();
      break;
    case 'A':
      sub = read_int();
      g = gram_A(int(sub));
      break;
    case 'D':
      sub = read_int();
      g = gram_D(int(sub));
      break;
    case 'E':
      sub = read_int();
      g = gram_E(int(sub));
      break;
    case 'C':  // C_n = D_n as a (-2)-root lattice
      sub = read_int();
      if (sub < 2) parse_fail(expr, "C_n needs n >= 2");
      g = gram_D(int(sub));
      break;
    case 'F':  // F_4 = D_4
      sub = read_int();
      if (sub != 4) parse_fail(expr, "only F4 is defined");
      g = gram_D(4);
      break;
    case 'B':  // B_n(2) = A_1^n; the scale suffix must supply the factor 2
      sub = read_int();
      if (sub < 1) parse_fail(expr, "B_n needs n >= 1");
      b_alias = true;
      g = IntMat(int(sub), int(sub));
      for (int i = 0; i < sub; ++i) g(i, i) = -1;  // B_n before scaling
      break;
    case 'I': {
      if (peek() != '{') parse_fail(expr, "expected I{p,q}");
      ++pos;
      long p = read_int();
      if (peek() != ',') parse_fail(expr, "expected I{p,q}");
      ++pos;
      long q = read_int();
      if (peek() != '}') parse_fail(expr, "expected I{p,q}");
      ++pos;
      g = gram_I(int(p), int(q));
      stem = "I" + std::to_string(p) + "," + std::to_string(q);
      break;
    }
    default:
      parse_fail(expr, std::string("unknown summand '") + tok + "'");
  }
  if (head != 'U' && head != 'I') stem += std::to_string(sub);

  if (peek() == '(') {
    ++pos;
    long m = read_int();
    if (peek() != ')') parse_fail(expr, "unterminated scale suffix");
    ++pos;
    if (m <= 0) parse_fail(expr, "scale must be positive");
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g(i, j) *= m;
    stem += "(" + std::to_string(m) + ")";
  }
  if (pos != tok.size()) parse_fail(expr, "trailing characters in '" + tok + "'");
  if (b_alias)
    for (int i = 0; i < g.rows(); ++i)
      if (g(i, i) % 2 != 0)
        parse_fail(expr, "B_n requires an even scale, e.g. B" +
                             std::to_string(sub) + "(2)");
  return {g, stem};
}

}  // namespace detail

inline Lattice build_lattice(const std::string& expr) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "empty lattice expression");

  Lattice l;
  l.expr = expr;
  l.gram = IntMat(0, 0);
  size_t start = 0;
  int part = 0;
  while (start <= s.size()) {
    size_t plus = s.find('+', start);
    std::string tok = s.substr(start, plus == std::string::npos ? plus : plus - start);
    long rep = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      rep = std::stol(tok.substr(caret + 1));
      if (rep < 1) detail::parse_fail(expr, "bad repetition");
      tok = tok.substr(0, caret);
    }
    detail::TokenLattice t = detail::parse_token(tok, expr);
    for (long k = 0; k < rep; ++k) {
      l.gram = block_diag(l.gram, t.gram);
      ++part;
      for (int i = 0; i < t.gram.rows(); ++i)
        l.basis_labels.push_back(t.label_stem + "." + std::to_string(part) + "." +
                                 std::to_string(i + 1));
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  require(det(l.gram) != 0, "degenerate lattice");
  return l;
}

// ---------------------------------------------------------------------------
// 2-elementary invariants (r, a, delta) and the derived (g, k).
// ---------------------------------------------------------------------------

struct TwoElementaryInvariants {
  int r = 0;
  int a = 0;
  int delta = 0;
  int g = 0;
  int k = 0;
  bool is_two_elementary = false;

  bool operator==(const TwoElementaryInvariants&) const = default;
  std::string str() const {
    std::ostringstream os;
    os << "(" << r << "," << a << "," << delta << ")";
    return os.str();
  }
};

inline TwoElementaryInvariants two_elementary_invariants(const Lattice& l) {
  require(l.is_even(), "invariants require an even lattice");
  TwoElementaryInvariants inv;
  inv.r = l.rank();
  SmithResult s = smith_normal_form(l.gram);
  auto factors = s.invariant_factors();
  require(int(factors.size()) == l.rank(), "degenerate lattice");
  inv.is_two_elementary = true;
  for (const Int& f : factors) {
    if (f == 1) continue;
    if (f == 2)
      ++inv.a;
    else
      inv.is_two_elementary = false;
  }
  if (!inv.is_two_elementary) return inv;

  // Discriminant form on generators x_i = (column i of V) / d_i.  delta = 1
  // iff some q-value x^2 mod 2Z is a half-integer, i.e. v^T G v != 0 mod 4.
  for (int i = 0; i < l.rank(); ++i) {
    if (s.d(i, i) != 2) continue;
    IntVec v = s.v.col(i);
    Int q4 = inner(l.gram, v, v);  // 4 * q(x_i)
    if (((q4 % 4) + 4) % 4 != 0) {
      inv.delta = 1;
      break;
    }
  }
  inv.g = 11 - (inv.r + inv.a) / 2;
  inv.k = (inv.r - inv.a) / 2;
  return inv;
}

// ---------------------------------------------------------------------------
// Isotropic vectors: quotient lattice and the odd / even ordinary / even
// characteristic trichotomy.
// ---------------------------------------------------------------------------

inline Lattice quotient_lattice(const Lattice& l, const IntVec& v) {
  require(l.norm(v) == 0, "quotient requires an isotropic vector");
  require(gcd_vec(v) == 1, "quotient requires a primitive vector");
  // Basis of v-perp (saturated), with v itself as the first basis vector.
  IntMat row(1, l.rank());
  for (int j = 0; j < l.rank(); ++j) row(0, j) = mul(l.gram, v)[j];
  IntMat k = kernel_basis(row);  // rank-1 kernel of the product-with-v form
  require(k.cols() == l.rank() - 1, "unexpected kernel rank");
  // Express v in the kernel basis: solve k * w = v over Z.
  int n = l.rank(), m = k.cols();
  std::vector<RatVec> a(n, RatVec(m + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = Rat(k(i, j));
    a[i][m] = Rat(v[i]);
  }
  // Gaussian elimination for the overdetermined consistent system.
  int row_i = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < m && row_i < n; ++c) {
    int piv = -1;
    for (int i = row_i; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row_i], a[piv]);
    Rat d = a[row_i][c];
    for (int j = c; j <= m; ++j) a[row_i][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == row_i || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j <= m; ++j) a[i][j] -= f * a[row_i][j];
    }
    pivot_col.push_back(c);
    ++row_i;
  }
  IntVec w(m, Int(0));
  for (size_t t = 0; t < pivot_col.size(); ++t) {
    require(is_integer(a[t][m]), "v not integral in kernel basis");
    w[pivot_col[t]] = num(a[t][m]);
  }
  require(gcd_vec(w) == 1, "v not primitive inside its perp");
  IntMat wfull = complete_to_basis(w);
  // Quotient basis: images of k * (columns 2..m of wfull).
  Lattice q;
  q.gram = IntMat(m - 1, m - 1);
  IntMat basis(n, m - 1);
  for (int j = 1; j < m; ++j) {
    IntVec col(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < m; ++t) col[i] += k(i, t) * wfull(t, j);
    for (int i = 0; i < n; ++i) basis(i, j - 1) = col[i];
  }
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j)
      q.gram(i, j) = inner(l.gram, basis.col(i), basis.col(j));
  require(det(q.gram) != 0, "degenerate quotient");
  return q;
}

enum class IsotropicKind { odd, even_ordinary, even_characteristic };

inline std::string to_string(IsotropicKind k) {
  switch (k) {
    case IsotropicKind::odd: return "odd";
    case IsotropicKind::even_ordinary: return "even_ordinary";
    case IsotropicKind::even_characteristic: return "even_characteristic";
  }
  return "?";
}

struct IsotropicClass {
  IsotropicKind kind;
  TwoElementaryInvariants quotient;
};

inline IsotropicClass classify_isotropic(const Lattice& l, IntVec v) {
  require(l.norm(v) == 0 && !is_zero(v), "classify_isotropic needs isotropic v != 0");
  v = primitive_part(v);
  TwoElementaryInvariants amb = two_elementary_invariants(l);
  require(amb.is_two_elementary, "ambient lattice must be 2-elementary");
  IsotropicClass c;
  c.quotient = two_elementary_invariants(quotient_lattice(l, v));
  Int d = divisibility(l, v);
  if (d == 1) {
    c.kind = IsotropicKind::odd;
    require(c.quotient.a == amb.a && c.quotient.delta == amb.delta,
            "odd isotropic vector with unexpected quotient invariants");
  } else {
    require(d == 2, "unexpected divisibility of isotropic vector");
    require(c.quotient.a == amb.a - 2,
            "even isotropic vector with unexpected quotient a");
    if (c.quotient.delta == amb.delta)
      c.kind = IsotropicKind::even_ordinary;
    else {
      require(amb.delta == 1 && c.quotient.delta == 0,
              "impossible coparity change in quotient");
      c.kind = IsotropicKind::even_characteristic;
    }
  }
  return c;
}

}  // namespace vinlab
