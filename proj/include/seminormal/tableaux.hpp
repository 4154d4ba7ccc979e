// Partitions, compositions, Young tableaux, the symmetric group, dominance
// orders, Garnir data, and the distinguished tableaux used everywhere else.
#pragma once

#include <string>
#include <vector>

#include "seminormal/rational.hpp"

namespace seminormal {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int n() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int r) const {  // 1-based row, 0 outside
    return (r >= 1 && r <= rows()) ? parts[r - 1] : 0;
  }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;  // "3,2,2"
};

struct Composition {
  std::vector<int> parts;  // nonnegative
  int n() const;
};

struct Node {
  int row = 0;  // 1-based from the top
  int col = 0;  // 1-based from the left
  bool operator==(const Node& o) const { return row == o.row && col == o.col; }
  bool operator!=(const Node& o) const { return !(*this == o); }
};

inline int content(const Node& a) { return a.col - a.row; }
// b' - b - (a' - a) for nodes (a,b) -> (a',b').
inline int radial_distance(const Node& from, const Node& to) {
  return content(to) - content(from);
}

// One-line permutation of {1..n}; img[x-1] is the image of x. Products
// compose left to right: x * (u v) = (x * u) * v.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : img(std::move(im)) {}
  static Permutation identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int apply(int x) const { return img[x - 1]; }
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

Permutation perm_compose(const Permutation& u, const Permutation& v);  // u then v
Permutation perm_inverse(const Permutation& w);
int perm_length(const Permutation& w);  // Coxeter length = inversions
Permutation perm_gen(int n, int i);     // s_i
// sigma_{i,j} = (i,i+1)(i+1,i+2)...(j-1,j), i <= j; sigma_{i,i} = 1.
Permutation sigma_perm(int n, int i, int j);
Permutation transposition(int n, int i, int m);  // (i, m)
// A reduced expression [i_1, ..., i_k] with w = s_{i_1} * ... * s_{i_k}.
std::vector<int> reduced_word(const Permutation& w);

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[r][c], entries 1..n

  Tableau() = default;
  Tableau(Partition sh, std::vector<std::vector<int>> rw);
  int n() const { return shape.n(); }
  int at(const Node& nd) const { return rows[nd.row - 1][nd.col - 1]; }
  int at(int r, int c) const { return rows[r - 1][c - 1]; }
  Node node_of(int value) const;
  int row_of(int value) const { return node_of(value).row; }
  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator!=(const Tableau& o) const { return !(*this == o); }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
  std::string str() const;  // "1,2,7/3,4/5,6"
};

bool is_row_standard(const Tableau& t);
bool is_column_standard(const Tableau& t);
bool is_standard(const Tableau& t);

// All partitions of n, ordered descending in the total order prec.
std::vector<Partition> partitions_of(int n);
bool dominance_leq(const Partition& a, const Partition& b);   // a <= b
bool total_prec(const Partition& a, const Partition& b);      // a < b strictly
bool dominance_leq_tableaux(const Tableau& s, const Tableau& t);
bool total_prec_tableaux(const Tableau& s, const Tableau& t);

Tableau superstandard(const Partition& shape);         // t^lambda, rows filled
Tableau column_superstandard(const Partition& shape);  // t_lambda, columns filled

// All standard tableaux of the given shape, descending in the total order;
// the first entry is t^lambda. This enumeration is the basis order used by
// every matrix in the library.
std::vector<Tableau> standard_tableaux(const Partition& shape);

Permutation d_of(const Tableau& t);                    // t = t^lambda * d(t)
Tableau apply(const Tableau& t, const Permutation& w); // entry relabeling

std::vector<Node> removable_nodes(const Partition& shape);  // top to bottom
std::vector<Node> addable_nodes(const Partition& shape);

// t^lambda sigma_{c,n} with c the entry of t^lambda at the removable node:
// n sits at the node, 1..n-1 are filled in along rows.
Tableau james_murphy_tableau(const Partition& shape, const Node& node);

Tableau restrict_tableau(const Tableau& t, int k);     // keep entries 1..k
std::vector<Partition> shape_chain(const Tableau& t);  // shapes of t|1..k
// The lambda^{<=s}-tableau agreeing with t on entries r..s, with 1..r-1
// filled in along rows in the remaining nodes.
Tableau t_leq(const Tableau& t, int r, int s);

// Garnir data at (i, j): descent between rows i-1 and i in column j.
struct GarnirData {
  Tableau g;                        // the Garnir tableau
  Composition mu;                   // underlying composition (may have a zero part)
  int k = 0;                        // first belt value = t^lambda[i-1, j]
  int m = 0;                        // last belt value = t^lambda[i, j]
  std::vector<Node> belt;           // belt nodes, row i-1 tail then row i head
  std::vector<Permutation> coset;   // w with apply(g, w) row-standard
};

GarnirData garnir_tableau(const Partition& shape, int i, int j);
std::vector<Permutation> garnir_coset(const Partition& shape, int i, int j);

// Number of standard tableaux of the shape (exact).
Int standard_count(const Partition& shape);

Partition parse_partition(const std::string& text);
Tableau parse_tableau(const Partition& shape, const std::string& text);

}  // namespace seminormal
