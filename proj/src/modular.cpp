#include "seminormal/modular.hpp"

#include <stdexcept>

namespace seminormal {

namespace {

using FElem = CyclotomicField::Elem;

// Reduce a vector of rational functions; nullopt when any entry has a pole.
std::optional<std::vector<FElem>> reduce_vector(const CyclotomicField& field,
                                                SpechtModule& module, const SpechtVector& v) {
  std::vector<FElem> out(module.dim(), field.zero());
  for (const auto& [t, c] : v.terms) {
    auto r = field.reduce(c);
    if (!r) return std::nullopt;
    out[module.index_of(t)] = *r;
  }
  return out;
}

// Solve A x = b over the field, where A's columns are the given vectors.
// Returns nullopt when inconsistent.
struct SpanSolver {
  const CyclotomicField& field;
  std::vector<std::vector<FElem>> rows;  // echelon rows over the ambient space
  std::vector<std::vector<FElem>> combo; // expression of each row in the columns
  std::vector<int> lead;                 // leading position per row
  size_t ambient, ncols;

  SpanSolver(const CyclotomicField& f, const std::vector<std::vector<FElem>>& cols,
             size_t ambient_dim)
      : field(f), ambient(ambient_dim), ncols(cols.size()) {
    for (size_t j = 0; j < cols.size(); ++j) {
      std::vector<FElem> combo_row(ncols, field.zero());
      combo_row[j] = field.one();
      insert(cols[j], std::move(combo_row));
    }
  }

  bool full_rank() const { return rows.size() == ncols; }

  void insert(std::vector<FElem> vec, std::vector<FElem> combo_row) {
    reduce(vec, combo_row);
    for (size_t p = 0; p < ambient; ++p) {
      if (field.is_zero(vec[p])) continue;
      FElem inv = field.inv(vec[p]);
      for (auto& x : vec) x = field.mul(x, inv);
      for (auto& x : combo_row) x = field.mul(x, inv);
      rows.push_back(std::move(vec));
      combo.push_back(std::move(combo_row));
      lead.push_back(static_cast<int>(p));
      return;
    }
    // dependent column; ignored (full_rank() will be false)
  }

  void reduce(std::vector<FElem>& vec, std::vector<FElem>& combo_row) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const FElem& c = vec[lead[r]];
      if (field.is_zero(c)) continue;
      FElem f = c;
      for (size_t p = 0; p < ambient; ++p)
        vec[p] = field.sub(vec[p], field.mul(f, rows[r][p]));
      for (size_t p = 0; p < ncols; ++p)
        combo_row[p] = field.sub(combo_row[p], field.mul(f, combo[r][p]));
    }
  }

  // Coordinates of vec over the columns, or nullopt if outside the span.
  std::optional<std::vector<FElem>> coordinates(std::vector<FElem> vec) const {
    std::vector<FElem> coeffs(ncols, field.zero());
    for (size_t r = 0; r < rows.size(); ++r) {
      const FElem& c = vec[lead[r]];
      if (field.is_zero(c)) continue;
      FElem f = c;
      for (size_t p = 0; p < ambient; ++p)
        vec[p] = field.sub(vec[p], field.mul(f, rows[r][p]));
      for (size_t p = 0; p < ncols; ++p)
        coeffs[p] = field.add(coeffs[p], field.mul(f, combo[r][p]));
    }
    for (size_t p = 0; p < ambient; ++p)
      if (!field.is_zero(vec[p])) return std::nullopt;
    return coeffs;
  }
};

// Embeds a permutation of S_m into S_n fixing m+1..n.
Permutation embed(const Permutation& w, int n) {
  Permutation out = Permutation::identity(n);
  for (int x = 1; x <= w.n(); ++x) out.img[x - 1] = w.apply(x);
  return out;
}

// Reduced action matrix of T_i on the Specht module of the shape, over the field.
std::vector<std::vector<FElem>> reduced_action_matrix(const CyclotomicField& field,
                                                      SpechtModule& module, int i) {
  const auto& mat = module.action_matrix(i);
  std::vector<std::vector<FElem>> out(mat.size());
  for (size_t r = 0; r < mat.size(); ++r) {
    out[r].reserve(mat.size());
    for (size_t c = 0; c < mat.size(); ++c) {
      auto red = field.reduce(mat[r][c]);
      if (!red) throw std::logic_error("action matrix entry with a pole at zeta");
      out[r].push_back(std::move(*red));
    }
  }
  return out;
}

// Common engine for both submodule theorems: reduce the orbit basis
// {f . T_{d(u)}}, compute generator matrices on its span, compare with the
// standard-basis matrices of the comparison Specht module.
void verify_span_isomorphism(SubmoduleReport& rep, const CyclotomicField& field,
                             SpechtModule& big, const SpechtVector& f,
                             const Partition& small_shape, int max_generator) {
  auto f_red = reduce_vector(field, big, f);
  if (!f_red) {
    rep.pole_free = false;
    rep.verdict = "failed";
    return;
  }
  SpechtModule small(small_shape);
  std::vector<SpechtVector> orbit_exact;
  std::vector<std::vector<FElem>> orbit;
  for (const Tableau& u : small.basis()) {
    SpechtVector vu = big.act_word(f, embed(d_of(u), big.n()));
    auto red = reduce_vector(field, big, vu);
    if (!red) throw std::logic_error("orbit vector left A_zeta despite pole-free generator");
    orbit_exact.push_back(std::move(vu));
    orbit.push_back(std::move(*red));
  }
  SpanSolver solver(field, orbit, big.dim());
  if (!solver.full_rank()) {
    rep.basis_independent = false;
    rep.verdict = "failed";
    return;
  }
  for (int i = 1; i <= max_generator; ++i) {
    auto small_mat = reduced_action_matrix(field, small, i);
    bool equal = true;
    for (size_t u = 0; u < orbit_exact.size() && equal; ++u) {
      SpechtVector img = big.act_gen(orbit_exact[u], i);
      auto red = reduce_vector(field, big, img);
      if (!red) throw std::logic_error("orbit image left A_zeta");
      auto coords = solver.coordinates(std::move(*red));
      if (!coords) {
        equal = false;
        break;
      }
      for (size_t v = 0; v < coords->size(); ++v)
        if (!field.is_zero(field.sub((*coords)[v], small_mat[u][v]))) {
          equal = false;
          break;
        }
    }
    ++rep.generators_checked;
    rep.generator_equal.push_back(equal);
    if (!equal) {
      rep.matrices_equal = false;
      rep.verdict = "failed";
      return;
    }
  }
  rep.verdict = "confirmed";
}

Partition shape_minus(const Partition& shape, const Node& node) {
  std::vector<int> parts = shape.parts;
  parts[node.row - 1] -= 1;
  return Partition(parts);
}

}  // namespace

BranchingFiltration branching_filtration(SpechtModule& module) {
  BranchingFiltration out;
  out.shape = module.shape();
  int n = module.n();
  auto rem = removable_nodes(module.shape());
  for (const Node& nd : rem) {
    BranchingFiltration::Layer layer;
    layer.node = nd;
    layer.quotient_shape = shape_minus(module.shape(), nd);
    for (int i = 0; i < module.dim(); ++i)
      if (module.tableau_at(i).row_of(n) >= nd.row) layer.members.push_back(i);
    out.layers.push_back(std::move(layer));
  }
  // Layer dimensions: dim(E_j) - dim(E_{j+1}) = dim S^{mu_j}.
  for (size_t j = 0; j < out.layers.size(); ++j) {
    size_t next = j + 1 < out.layers.size() ? out.layers[j + 1].members.size() : 0;
    Int expected = standard_count(out.layers[j].quotient_shape);
    if (Int(static_cast<long>(out.layers[j].members.size() - next)) != expected)
      out.dims_match = false;
  }
  // Closure of each span under the subalgebra generators.
  for (const auto& layer : out.layers) {
    std::vector<bool> in_layer(module.dim(), false);
    for (int i : layer.members) in_layer[i] = true;
    for (int g = 1; g <= n - 2 && out.layers_closed; ++g) {
      const auto& mat = module.action_matrix(g);
      for (int i : layer.members)
        for (int c = 0; c < module.dim(); ++c)
          if (!mat[i][c].is_zero() && !in_layer[c]) {
            out.layers_closed = false;
            break;
          }
    }
  }
  return out;
}

SubmoduleReport verify_submodule_fn(const Partition& shape, int node_index, long e) {
  SubmoduleReport rep;
  rep.shape = shape;
  rep.node_index = node_index;
  rep.e = e;
  auto rem = removable_nodes(shape);
  if (node_index < 1 || node_index > static_cast<int>(rem.size()))
    throw std::invalid_argument("verify_submodule_fn: bad node index");
  rep.node = rem[node_index - 1];
  CyclotomicField field(e);
  for (size_t i = node_index; i < rem.size(); ++i) {
    int r = content(rep.node) - content(rem[i]);
    rep.radials.push_back(r);
    auto cls = field.reduce(quantum_int(r));
    bool nonzero = cls && !field.is_zero(*cls);
    rep.hypothesis.push_back(nonzero);
    if (!nonzero) rep.hypothesis_holds = false;
  }
  if (!rep.hypothesis_holds) {
    rep.verdict = "hypothesis-failed";
    return rep;
  }
  SpechtModule module(shape);
  GeneralFnResult fn = general_fn(module, rep.node);
  verify_span_isomorphism(rep, field, module, fn.f, shape_minus(shape, rep.node),
                          module.n() - 2);
  return rep;
}

SubmoduleReport verify_submodule_tleq(const Partition& shape, const Tableau& t, int r, long e) {
  if (r < 2 || r > shape.n()) throw std::invalid_argument("verify_submodule_tleq: bad r");
  SubmoduleReport rep;
  rep.shape = shape;
  rep.e = e;
  rep.node = t.node_of(shape.n());
  CyclotomicField field(e);
  SpechtModule module(shape);
  Tableau tle = t_leq(t, r, shape.n());
  GeneralFtResult ft = general_ft(module, tle);
  Partition small = restrict_tableau(t, r - 1).shape;
  verify_span_isomorphism(rep, field, module, ft.f, small, r - 2);
  return rep;
}

int radical_rank(const Partition& shape, long e) {
  CyclotomicField field(e);
  SpechtModule module(shape);
  BaseChange bc = base_change(module, Method::Fast);
  auto gram = gram_matrix(module, bc);
  size_t dim = gram.size();
  std::vector<std::vector<FElem>> rows(dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      if (!gram[i][j].is_laurent())
        throw std::logic_error("radical_rank: Gram entry outside A");
      auto red = field.reduce(gram[i][j]);
      rows[i].push_back(std::move(*red));
    }
  // Gaussian elimination rank over the field.
  int rank = 0;
  size_t col = 0;
  for (size_t row = 0; row < dim && col < dim; ++col) {
    size_t piv = row;
    while (piv < dim && field.is_zero(rows[piv][col])) ++piv;
    if (piv == dim) continue;
    std::swap(rows[row], rows[piv]);
    FElem inv = field.inv(rows[row][col]);
    for (size_t j = col; j < dim; ++j) rows[row][j] = field.mul(rows[row][j], inv);
    for (size_t i = 0; i < dim; ++i) {
      if (i == row || field.is_zero(rows[i][col])) continue;
      FElem f = rows[i][col];
      for (size_t j = col; j < dim; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[row][j]));
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace seminormal
