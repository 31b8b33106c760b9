#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "glat/errors.hpp"
#include "glat/families.hpp"

// Chevalley basis from a Cartan matrix. Conventions, fixed once and checked
// downstream by the exhaustive validator:
//   * A[i][j] = <alpha_i, alpha_j^vee>; for G2 this is [[2,-1],[-3,2]] with
//     alpha_0 the short root.
//   * [h_i, e_b] = <b, alpha_i^vee> e_b,  [e_b, e_{-b}] = b^vee (coroot),
//     [e_a, e_b] = N(a,b) e_{a+b} with |N| = p+1 (p the root string).
//   * Positive roots are ordered by (height, lex); for each non-simple
//     positive root the minimal decomposition pair gets N = +(p+1)
//     (the "extraspecial" normalization). All remaining constants follow
//     from the standard identities
//       N(a,b) = -N(b,a) = -N(-a,-b),
//       a+b+c = 0  =>  N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b),
//     and the four-term relation obtained from Jacobi on root quadruples.

namespace glat {

namespace {

using Root = std::vector<int>;  // coefficients over the simple roots

Root add(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Root sub(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Root neg(const Root& a) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

int height(const Root& a) {
  int h = 0;
  for (int x : a) h += x;
  return h;
}

bool is_positive(const Root& a) { return height(a) > 0; }

struct RootSystem {
  std::vector<std::vector<int>> cartan;  // A[i][j]
  std::vector<long> sym;                 // d_i with (a_i, a_j) = d_j A[i][j]
  std::vector<Root> pos;                 // ordered by (height, lex)
  std::set<Root> all;

  int rank() const { return static_cast<int>(cartan.size()); }

  int pairing(const Root& b, int i) const {  // <b, alpha_i^vee>
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += b[j] * cartan[j][i];
    return s;
  }

  long norm2(const Root& b) const {  // (b, b)
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += static_cast<long>(b[i]) * b[j] * sym[j] * cartan[i][j];
    return s;
  }

  bool is_root(const Root& a) const { return all.count(a) > 0; }

  int order_of(const Root& a) const {  // index in pos
    const auto it = std::find(pos.begin(), pos.end(), a);
    GLAT_CHECK(it != pos.end(), "root not positive");
    return static_cast<int>(it - pos.begin());
  }

  // Largest p with b - p*a a root (the down part of the a-string through b).
  int string_down(const Root& a, const Root& b) const {
    int p = 0;
    Root c = sub(b, a);
    while (is_root(c)) {
      ++p;
      c = sub(c, a);
    }
    return p;
  }
};

RootSystem generate_roots(const std::vector<std::vector<int>>& cartan) {
  RootSystem rs;
  rs.cartan = cartan;
  const int r = static_cast<int>(cartan.size());

  // Symmetrizer: d_i A[i][j] = d_j A[j][i], minimal positive integers.
  {
    std::vector<Rat> d(r, Rat(0));
    d[0] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (cartan[i][j] == 0) continue;
          if (d[i] != 0 && d[j] == 0) {
            d[j] = d[i] * cartan[j][i] / cartan[i][j];
            changed = true;
          }
        }
    }
    mpz_class l(1);
    for (const auto& x : d) {
      GLAT_CHECK(x > 0, "Cartan matrix not symmetrizable / disconnected");
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    for (const auto& x : d) {
      Rat scaled = x * l;
      rs.sym.push_back(scaled.get_num().get_si());
    }
  }

  std::set<Root> posset;
  std::vector<Root> frontier;
  for (int i = 0; i < r; ++i) {
    Root a(r, 0);
    a[i] = 1;
    posset.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (int i = 0; i < r; ++i) {
        Root ai(r, 0);
        ai[i] = 1;
        if (b == ai) continue;  // 2*alpha_i is never a root
        int p = 0;
        for (Root c = sub(b, ai); posset.count(c); c = sub(c, ai)) ++p;
        const int q = p - rs.pairing(b, i);
        if (q > 0) {
          Root c = add(b, ai);
          if (posset.insert(c).second) next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  rs.pos.assign(posset.begin(), posset.end());
  std::sort(rs.pos.begin(), rs.pos.end(), [](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  for (const Root& a : rs.pos) {
    rs.all.insert(a);
    rs.all.insert(neg(a));
  }
  return rs;
}

// Structure constants N(a,b) over all root pairs, reduced to the table on
// positive special pairs.
class Constants {
public:
  explicit Constants(const RootSystem& rs) : rs_(rs) {
    for (const Root& gamma : rs_.pos) {
      if (height(gamma) < 2) continue;
      std::vector<std::pair<int, int>> pairs;  // (order(a), order(b)), a + b = gamma
      for (int ia = 0; ia < static_cast<int>(rs_.pos.size()); ++ia) {
        const Root rest = sub(gamma, rs_.pos[ia]);
        if (!is_positive(rest) || !rs_.is_root(rest)) continue;
        const int ib = rs_.order_of(rest);
        if (ia < ib) pairs.emplace_back(ia, ib);
      }
      GLAT_CHECK(!pairs.empty(), "non-simple root without decomposition");
      std::sort(pairs.begin(), pairs.end());
      const auto [ea, eb] = pairs.front();
      const Root a = rs_.pos[ea], b = rs_.pos[eb];
      npos_[{ea, eb}] = Rat(rs_.string_down(a, b) + 1);
      for (std::size_t s = 1; s < pairs.size(); ++s) {
        const auto [xa, xb] = pairs[s];
        const Root ap = rs_.pos[xa], bp = rs_.pos[xb];
        // Four-term relation on (a, b, -a', -b') with a+b = a'+b' = gamma:
        //   N(a,b) N(-a',-b')/(g,g) + N(b,-a') N(a,-b')/(b-a',b-a')
        //     + N(-a',a) N(b,-b')/(a-a',a-a') = 0.
        Rat rhs(0);
        if (rs_.is_root(sub(b, ap)))
          rhs += lookup(b, neg(ap)) * lookup(a, neg(bp)) / Rat(rs_.norm2(sub(b, ap)));
        if (rs_.is_root(sub(a, ap)))
          rhs -= lookup(a, neg(ap)) * lookup(b, neg(bp)) / Rat(rs_.norm2(sub(a, ap)));
        const Rat n = rhs * Rat(rs_.norm2(gamma)) / npos_[{ea, eb}];
        GLAT_CHECK(n != 0, "vanishing structure constant on special pair");
        npos_[{xa, xb}] = n;
      }
    }
    // |N| = p + 1 on every special pair.
    for (const auto& [key, val] : npos_) {
      const Root a = rs_.pos[key.first], b = rs_.pos[key.second];
      Rat expect(rs_.string_down(a, b) + 1);
      GLAT_CHECK(val == expect || val == -expect, "structure constant magnitude");
    }
  }

  // N(a, b) for arbitrary roots with a + b a root.
  Rat lookup(const Root& a, const Root& b) const {
    GLAT_CHECK(rs_.is_root(add(a, b)), "lookup on non-root sum");
    const bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) return pos_pair(a, b);
    if (!pa && !pb) return -pos_pair(neg(a), neg(b));
    if (!pa) return -lookup(b, a);
    // a positive, b negative; s = a + b.
    const Root s = add(a, b);
    const Root bp = neg(b);
    if (is_positive(s)) {
      // N(a,b)/(s,s) = N(b,-s)/(a,a);  N(b,-s) = -N(b', s), b' + s = a.
      return -Rat(rs_.norm2(s)) / Rat(rs_.norm2(a)) * pos_pair(bp, s);
    }
    // N(a,b)/(s,s) = N(-s,a)/(b,b);  (-s) + a = b' positive.
    return Rat(rs_.norm2(s)) / Rat(rs_.norm2(bp)) * pos_pair(neg(s), a);
  }

private:
  Rat pos_pair(const Root& a, const Root& b) const {
    const int ia = rs_.order_of(a), ib = rs_.order_of(b);
    const auto it = npos_.find({std::min(ia, ib), std::max(ia, ib)});
    GLAT_CHECK(it != npos_.end(), "positive pair constant missing");
    return ia < ib ? it->second : -it->second;
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, Rat> npos_;
};

}  // namespace

GradedLieAlgebra build_g2_split() {
  const RootSystem rs = generate_roots({{2, -1}, {-3, 2}});
  GLAT_CHECK(rs.pos.size() == 6, "G2 must have 6 positive roots");
  const Constants cons(rs);

  // Grading by the coefficient of the short simple root alpha_0.
  // Basis order: degree ascending; root vectors within a degree by height of
  // |root| then lex; degree 0 is (negative root vectors, h_1, h_2, positive
  // root vectors).
  struct Elem {
    bool cartan = false;
    int cartan_index = 0;
    Root root;  // when !cartan
  };
  std::vector<Elem> basis;
  std::vector<int> degrees;
  std::vector<Root> all_roots;
  for (const Root& a : rs.pos) {
    all_roots.push_back(a);
    all_roots.push_back(neg(a));
  }
  auto abs_height_lex = [](const Root& x, const Root& y) {
    const int hx = std::abs(height(x)), hy = std::abs(height(y));
    if (hx != hy) return hx < hy;
    return x < y;
  };
  const int kdepth = [&] {
    int m = 0;
    for (const Root& a : rs.pos) m = std::max(m, a[0]);
    return m;
  }();
  for (int d = -kdepth; d <= kdepth; ++d) {
    std::vector<Root> at_d;
    for (const Root& a : all_roots)
      if (a[0] == d) at_d.push_back(a);
    std::sort(at_d.begin(), at_d.end(), abs_height_lex);
    if (d == 0) {
      std::vector<Root> negs, poss;
      for (const Root& a : at_d) (is_positive(a) ? poss : negs).push_back(a);
      for (const Root& a : negs) {
        basis.push_back({false, 0, a});
        degrees.push_back(0);
      }
      for (int i = 0; i < rs.rank(); ++i) {
        basis.push_back({true, i, {}});
        degrees.push_back(0);
      }
      for (const Root& a : poss) {
        basis.push_back({false, 0, a});
        degrees.push_back(0);
      }
    } else {
      for (const Root& a : at_d) {
        basis.push_back({false, 0, a});
        degrees.push_back(d);
      }
    }
  }
  const int dim = static_cast<int>(basis.size());
  GLAT_CHECK(dim == 14, "G2 dimension");

  std::map<Root, int> root_index;
  for (int i = 0; i < dim; ++i)
    if (!basis[i].cartan) root_index[basis[i].root] = i;
  std::vector<int> cartan_index(rs.rank());
  for (int i = 0; i < dim; ++i)
    if (basis[i].cartan) cartan_index[basis[i].cartan_index] = i;

  // Coroot of b as integer coefficients over the simple coroots.
  auto coroot = [&](const Root& b) {
    std::vector<Rat> c(rs.rank());
    const long n2 = rs.norm2(b);
    for (int i = 0; i < rs.rank(); ++i) {
      c[i] = Rat(2 * b[i] * rs.sym[i], n2);
      c[i].canonicalize();
      GLAT_CHECK(c[i].get_den() == 1, "coroot not integral");
    }
    return c;
  };

  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  auto set_entry = [&](int i, int j, std::vector<BracketTerm> terms) {
    std::erase_if(terms, [](const BracketTerm& t) { return t.coeff == 0; });
    if (terms.empty()) return;
    GLAT_CHECK(i < j, "table order");
    table[{i, j}] = std::move(terms);
  };

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Elem& x = basis[i];
      const Elem& y = basis[j];
      if (x.cartan && y.cartan) continue;
      if (x.cartan != y.cartan) {
        const Elem& h = x.cartan ? x : y;
        const Elem& e = x.cartan ? y : x;
        const int sign = x.cartan ? 1 : -1;  // [h, e] listed as (i, j)
        const int c = rs.pairing(e.root, h.cartan_index);
        if (c != 0) set_entry(i, j, {{root_index.at(e.root), Rat(sign * c)}});
        continue;
      }
      const Root s = add(x.root, y.root);
      if (height(s) == 0 && s == Root(rs.rank(), 0)) {
        // [e_b, e_{-b}] = b^vee
        const std::vector<Rat> c = coroot(x.root);
        std::vector<BracketTerm> terms;
        for (int t = 0; t < rs.rank(); ++t) terms.push_back({cartan_index[t], c[t]});
        std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.target < b.target; });
        set_entry(i, j, std::move(terms));
        continue;
      }
      if (rs.is_root(s)) set_entry(i, j, {{root_index.at(s), cons.lookup(x.root, y.root)}});
    }

  GradedLieAlgebra g = GradedLieAlgebra::create("g2_split", kdepth, std::move(degrees), std::move(table));
  const std::map<int, int> cd = g.component_dims();
  const std::map<int, int> expect{{-3, 2}, {-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}, {3, 2}};
  GLAT_CHECK(cd == expect, "G2 grading dimensions");
  return g;
}

}  // namespace glat
