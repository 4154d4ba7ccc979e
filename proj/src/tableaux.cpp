#include "seminormal/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace seminormal {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (img[x - 1] != x) return false;
  return true;
}

Permutation perm_compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("perm_compose: rank mismatch");
  std::vector<int> im(u.n());
  for (int x = 1; x <= u.n(); ++x) im[x - 1] = v.apply(u.apply(x));
  return Permutation(std::move(im));
}

Permutation perm_inverse(const Permutation& w) {
  std::vector<int> im(w.n());
  for (int x = 1; x <= w.n(); ++x) im[w.apply(x) - 1] = x;
  return Permutation(std::move(im));
}

int perm_length(const Permutation& w) {
  int len = 0;
  for (int x = 1; x <= w.n(); ++x)
    for (int y = x + 1; y <= w.n(); ++y)
      if (w.apply(x) > w.apply(y)) ++len;
  return len;
}

Permutation perm_gen(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("perm_gen: index out of range");
  Permutation w = Permutation::identity(n);
  std::swap(w.img[i - 1], w.img[i]);
  return w;
}

Permutation sigma_perm(int n, int i, int j) {
  if (i > j) throw std::invalid_argument("sigma_perm: i <= j required");
  Permutation w = Permutation::identity(n);
  // i -> j and x -> x-1 for i < x <= j.
  w.img[i - 1] = i;
  for (int x = i; x <= j; ++x) w.img[x - 1] = (x == i) ? j : x - 1;
  return w;
}

Permutation transposition(int n, int i, int m) {
  Permutation w = Permutation::identity(n);
  std::swap(w.img[i - 1], w.img[m - 1]);
  return w;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation u = w;
  Permutation inv = perm_inverse(u);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int p = 1; p < u.n(); ++p) {
      // Right descent: p occurs after p+1 in the one-line notation.
      if (inv.apply(p) > inv.apply(p + 1)) {
        // u := u * s_p shortens; record p on the left of the word built so far.
        std::swap(u.img[inv.apply(p + 1) - 1], u.img[inv.apply(p) - 1]);
        std::swap(inv.img[p - 1], inv.img[p]);
        word.push_back(p);
        progress = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Tableau::Tableau(Partition sh, std::vector<std::vector<int>> rw)
    : shape(std::move(sh)), rows(std::move(rw)) {
  if (static_cast<int>(rows.size()) != shape.rows())
    throw std::invalid_argument("Tableau: row count mismatch");
  std::vector<bool> seen(shape.n() + 1, false);
  for (int r = 0; r < shape.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.parts[r])
      throw std::invalid_argument("Tableau: row length mismatch");
    for (int v : rows[r]) {
      if (v < 1 || v > shape.n() || seen[v])
        throw std::invalid_argument("Tableau: entries must be a bijection onto 1..n");
      seen[v] = true;
    }
  }
}

Node Tableau::node_of(int value) const {
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c)
      if (rows[r][c] == value) return Node{r + 1, c + 1};
  throw std::invalid_argument("Tableau::node_of: value not present");
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) os << "/";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ",";
      os << rows[r][c];
    }
  }
  return os.str();
}

bool is_row_standard(const Tableau& t) {
  for (const auto& row : t.rows)
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] > row[c]) return false;
  return true;
}

bool is_column_standard(const Tableau& t) {
  for (size_t r = 1; r < t.rows.size(); ++r)
    for (size_t c = 0; c < t.rows[r].size(); ++c)
      if (t.rows[r - 1][c] > t.rows[r][c]) return false;
  return true;
}

bool is_standard(const Tableau& t) { return is_row_standard(t) && is_column_standard(t); }

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return total_prec(b, a); });
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance_leq: size mismatch");
  int sa = 0, sb = 0;
  int rows = std::max(a.rows(), b.rows());
  for (int r = 1; r <= rows; ++r) {
    sa += a.part(r);
    sb += b.part(r);
    if (sa > sb) return false;
  }
  return true;
}

bool total_prec(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("total_prec: size mismatch");
  int sa = 0, sb = 0;
  int rows = std::max(a.rows(), b.rows());
  for (int r = 1; r <= rows; ++r) {
    sa += a.part(r);
    sb += b.part(r);
    if (sa != sb) return sa < sb;
  }
  return false;
}

namespace {

// Shape of the restriction of t to entries 1..k.
Partition restricted_shape(const Tableau& t, int k) {
  std::vector<int> counts(t.shape.rows(), 0);
  for (int r = 0; r < t.shape.rows(); ++r)
    for (int c = 0; c < t.shape.parts[r]; ++c)
      if (t.rows[r][c] <= k) ++counts[r];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return Partition(counts);
}

}  // namespace

bool dominance_leq_tableaux(const Tableau& s, const Tableau& t) {
  if (s.shape != t.shape) throw std::invalid_argument("dominance_leq_tableaux: shape mismatch");
  for (int k = 1; k <= s.n(); ++k)
    if (!dominance_leq(restricted_shape(s, k), restricted_shape(t, k))) return false;
  return true;
}

bool total_prec_tableaux(const Tableau& s, const Tableau& t) {
  if (s.shape != t.shape) throw std::invalid_argument("total_prec_tableaux: shape mismatch");
  for (int k = s.n() - 1; k >= 1; --k) {
    Partition ps = restricted_shape(s, k);
    Partition pt = restricted_shape(t, k);
    if (ps != pt) return total_prec(ps, pt);
  }
  return false;
}

Tableau superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  int v = 1;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c) rows[r].push_back(v++);
  return Tableau(shape, std::move(rows));
}

Tableau column_superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape.parts[r], 0);
  int v = 1;
  for (int c = 0; c < shape.part(1); ++c)
    for (int r = 0; r < shape.rows(); ++r)
      if (shape.parts[r] > c) rows[r][c] = v++;
  return Tableau(shape, std::move(rows));
}

namespace {

void gen_standard(const Partition& shape, int next, std::vector<int>& fill,
                  std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  int n = shape.n();
  if (next > n) {
    out.push_back(Tableau(shape, rows));
    return;
  }
  for (int r = 0; r < shape.rows(); ++r) {
    if (fill[r] >= shape.parts[r]) continue;
    if (r > 0 && fill[r - 1] <= fill[r]) continue;  // column condition
    rows[r][fill[r]] = next;
    ++fill[r];
    gen_standard(shape, next + 1, fill, rows, out);
    --fill[r];
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape.parts[r], 0);
  std::vector<int> fill(shape.rows(), 0);
  std::vector<Tableau> out;
  gen_standard(shape, 1, fill, rows, out);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return total_prec_tableaux(b, a); });
  return out;
}

Permutation d_of(const Tableau& t) {
  Tableau top = superstandard(t.shape);
  std::vector<int> im(t.n());
  for (int r = 0; r < t.shape.rows(); ++r)
    for (int c = 0; c < t.shape.parts[r]; ++c) im[top.rows[r][c] - 1] = t.rows[r][c];
  return Permutation(std::move(im));
}

Tableau apply(const Tableau& t, const Permutation& w) {
  if (w.n() != t.n()) throw std::invalid_argument("apply: rank mismatch");
  std::vector<std::vector<int>> rows = t.rows;
  for (auto& row : rows)
    for (auto& v : row) v = w.apply(v);
  return Tableau(t.shape, std::move(rows));
}

std::vector<Node> removable_nodes(const Partition& shape) {
  std::vector<Node> out;
  for (int r = 1; r <= shape.rows(); ++r)
    if (shape.part(r) > shape.part(r + 1)) out.push_back(Node{r, shape.part(r)});
  return out;
}

std::vector<Node> addable_nodes(const Partition& shape) {
  std::vector<Node> out;
  for (int r = 1; r <= shape.rows() + 1; ++r)
    if (shape.part(r) < shape.part(r - 1) || r == 1) out.push_back(Node{r, shape.part(r) + 1});
  return out;
}

Tableau james_murphy_tableau(const Partition& shape, const Node& node) {
  auto rem = removable_nodes(shape);
  if (std::find(rem.begin(), rem.end(), node) == rem.end())
    throw std::invalid_argument("james_murphy_tableau: node not removable");
  Tableau top = superstandard(shape);
  int c = top.at(node);
  return apply(top, sigma_perm(shape.n(), c, shape.n()));
}

Tableau restrict_tableau(const Tableau& t, int k) {
  if (k < 0 || k > t.n()) throw std::invalid_argument("restrict_tableau: bad k");
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  for (int r = 0; r < t.shape.rows(); ++r) {
    std::vector<int> row;
    for (int v : t.rows[r])
      if (v <= k) row.push_back(v);
    if (row.empty()) break;
    parts.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  return Tableau(Partition(parts), std::move(rows));
}

std::vector<Partition> shape_chain(const Tableau& t) {
  std::vector<Partition> out;
  for (int k = 1; k <= t.n(); ++k) out.push_back(restrict_tableau(t, k).shape);
  return out;
}

Tableau t_leq(const Tableau& t, int r, int s) {
  if (r < 1 || s < r || s > t.n()) throw std::invalid_argument("t_leq: bad range");
  Tableau restricted = restrict_tableau(t, s);
  // Nodes holding r..s stay; 1..r-1 are refilled along rows elsewhere.
  std::vector<std::vector<int>> rows(restricted.shape.rows());
  for (int i = 0; i < restricted.shape.rows(); ++i)
    rows[i].assign(restricted.shape.parts[i], 0);
  for (int i = 0; i < restricted.shape.rows(); ++i)
    for (int c = 0; c < restricted.shape.parts[i]; ++c)
      if (restricted.rows[i][c] >= r) rows[i][c] = restricted.rows[i][c];
  int v = 1;
  for (auto& row : rows)
    for (auto& x : row)
      if (x == 0) x = v++;
  return Tableau(restricted.shape, std::move(rows));
}

GarnirData garnir_tableau(const Partition& shape, int i, int j) {
  if (i < 2 || j < 1 || j > shape.part(i))
    throw std::invalid_argument("garnir_tableau: need i >= 2 and 1 <= j <= lambda_i");
  GarnirData out;
  // mu = (lambda_1, ..., lambda_{i-2}, j-1, j), zero part permitted when j = 1.
  for (int r = 1; r <= i - 2; ++r) out.mu.parts.push_back(shape.part(r));
  out.mu.parts.push_back(j - 1);
  out.mu.parts.push_back(j);
  int m_mu = out.mu.n();
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape.parts[r], 0);
  int v = 1;
  for (size_t r = 0; r < out.mu.parts.size(); ++r)
    for (int c = 0; c < out.mu.parts[r]; ++c) rows[r][c] = v++;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c)
      if (rows[r][c] == 0) rows[r][c] = v++;
  out.g = Tableau(shape, std::move(rows));

  Tableau top = superstandard(shape);
  out.k = top.at(i - 1, j);
  out.m = top.at(i, j);
  for (int c = j; c <= shape.part(i - 1); ++c) out.belt.push_back(Node{i - 1, c});
  for (int c = 1; c <= j; ++c) out.belt.push_back(Node{i, c});
  if (out.m - out.k + 1 != static_cast<int>(out.belt.size()) || m_mu != out.k + j - 1)
    throw std::logic_error("garnir_tableau: inconsistent belt");

  // All w moving only the belt values k..m with apply(g, w) row-standard:
  // choose which j of the belt values go to row i, order forced.
  int bsize = out.m - out.k + 1;
  std::vector<int> choose(j);
  std::iota(choose.begin(), choose.end(), 0);
  int n = shape.n();
  while (true) {
    std::vector<bool> inrow(bsize, false);
    for (int idx : choose) inrow[idx] = true;
    // Build the redistributed tableau's belt values, then the permutation
    // w with apply(g, w) equal to it.
    std::vector<int> rowi, rowim1;
    for (int idx = 0; idx < bsize; ++idx)
      (inrow[idx] ? rowi : rowim1).push_back(out.k + idx);
    Permutation w = Permutation::identity(n);
    size_t pos = 0;
    for (int c = j; c <= shape.part(i - 1); ++c, ++pos)
      w.img[out.g.at(i - 1, c) - 1] = rowim1[pos];
    for (int c = 1; c <= j; ++c)
      w.img[out.g.at(i, c) - 1] = rowi[c - 1];
    out.coset.push_back(std::move(w));
    // next combination
    int p = j - 1;
    while (p >= 0 && choose[p] == bsize - j + p) --p;
    if (p < 0) break;
    ++choose[p];
    for (int t2 = p + 1; t2 < j; ++t2) choose[t2] = choose[t2 - 1] + 1;
  }
  return out;
}

std::vector<Permutation> garnir_coset(const Partition& shape, int i, int j) {
  return garnir_tableau(shape, i, j).coset;
}

Int standard_count(const Partition& shape) {
  // Hook length formula; cheap enough to guard huge shapes before any
  // enumeration happens.
  int n = shape.n();
  Int numer = 1;
  for (int i = 2; i <= n; ++i) numer *= i;
  std::vector<int> conj(shape.part(1), 0);
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = 1; c <= shape.part(r); ++c) ++conj[c - 1];
  Int denom = 1;
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = 1; c <= shape.part(r); ++c)
      denom *= Int(shape.part(r) - c + conj[c - 1] - r + 1);
  return numer / denom;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

Tableau parse_tableau(const Partition& shape, const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream is(text);
  std::string rowtok;
  while (std::getline(is, rowtok, '/')) {
    std::vector<int> row;
    std::istringstream rs(rowtok);
    std::string tok;
    while (std::getline(rs, tok, ','))
      if (!tok.empty()) row.push_back(std::stoi(tok));
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

}  // namespace seminormal
