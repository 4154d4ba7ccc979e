#include "seminormal/seminormal.hpp"

#include <algorithm>
#include <stdexcept>

namespace seminormal {

namespace {

int content_of(const Tableau& t, int value) { return content(t.node_of(value)); }

const RatFunc& q_value() {
  static const RatFunc q = RatFunc::q_power(1);
  return q;
}

}  // namespace

void assert_unitriangular(const SpechtVector& f, const Tableau& t) {
  if (!(f.coeff(t) == RatFunc::one()))
    throw std::logic_error("seminormal vector: leading coefficient is not 1");
  for (const auto& [s, c] : f.terms) {
    if (s == t) continue;
    if (!dominance_leq_tableaux(t, s) || s == t)
      throw std::logic_error("seminormal vector: support not above the index tableau");
  }
}

RatFunc seminormal_ascent_coefficient(int rho) {
  RatFunc p = quantum_int(rho);
  return q_value() * quantum_int(rho + 1) * quantum_int(rho - 1) / (p * p);
}

GenActionCoeffs seminormal_gen_action(const Tableau& t, int i) {
  GenActionCoeffs out;
  Node ni = t.node_of(i);
  Node ni1 = t.node_of(i + 1);
  if (ni.row == ni1.row) {
    out.kind = GenActionCoeffs::SameRow;
    out.diag = q_value();
    return out;
  }
  if (ni.col == ni1.col) {
    out.kind = GenActionCoeffs::SameColumn;
    out.diag = -RatFunc::one();
    return out;
  }
  out.swapped = apply(t, perm_gen(t.n(), i));
  if (ni.row < ni1.row) {
    out.kind = GenActionCoeffs::Descent;
    out.rho = content(ni) - content(ni1);
    out.diag = -(RatFunc::one() / quantum_int(out.rho));
    out.cross = RatFunc::one();
  } else {
    out.kind = GenActionCoeffs::Ascent;
    out.rho = content(ni1) - content(ni);
    out.diag = RatFunc::q_power(out.rho) / quantum_int(out.rho);
    out.cross = seminormal_ascent_coefficient(out.rho);
  }
  return out;
}

namespace {

SpechtVector projector_with_candidates(SpechtModule& module, const Tableau& t,
                                       const std::function<std::vector<int>(int)>& candidates) {
  if (!is_standard(t)) throw std::invalid_argument("projector: tableau not standard");
  SpechtVector v = SpechtVector::basis_vector(t);
  for (int m = 1; m <= module.n(); ++m) {
    int cm = content_of(t, m);
    RatFunc rm = quantum_int(cm);
    for (int j : candidates(m)) {
      if (j == cm) continue;
      RatFunc c = quantum_int(j);
      SpechtVector lm = module.jm_action(v, m);
      v = specht_scale(specht_sub(lm, specht_scale(v, c)), (rm - c).inverse());
    }
  }
  return v;
}

}  // namespace

SpechtVector seminormal_projector(SpechtModule& module, const Tableau& t) {
  SpechtVector f = projector_with_candidates(module, t, [](int m) {
    std::vector<int> js;
    for (int j = -(m - 1); j <= m - 1; ++j) js.push_back(j);
    return js;
  });
  assert_unitriangular(f, t);
  return f;
}

SpechtVector seminormal_projector_global_residues(SpechtModule& module, const Tableau& t) {
  int n = module.n();
  SpechtVector f = projector_with_candidates(module, t, [n](int) {
    std::vector<int> js;
    for (int j = -(n - 1); j <= n - 1; ++j) js.push_back(j);
    return js;
  });
  assert_unitriangular(f, t);
  return f;
}

std::vector<int> standard_prefix_word(const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("standard_prefix_word: not standard");
  std::vector<int> word;
  Tableau cur = t;
  for (int v = t.n(); v >= 2; --v) {
    Node nd = cur.node_of(v);
    int c = superstandard(cur.shape).at(nd);
    for (int x = c; x <= v - 1; ++x) word.push_back(x);
    cur = restrict_tableau(cur, v - 1);
  }
  return word;
}

StepwiseResult seminormal_stepwise(SpechtModule& module, const Tableau& t) {
  const RatFunc& q = q_value();
  const RatFunc qm1 = q - RatFunc::one();
  StepwiseResult out;

  // Unstraightened expansion with formal term multiplicities.
  struct Cell {
    RatFunc coeff;
    long long mult = 0;
  };
  std::map<Tableau, Cell> state;
  Tableau top = superstandard(module.shape());
  state[top] = Cell{RatFunc::one(), 1};

  std::vector<int> word = standard_prefix_word(t);
  Tableau prefix = top;
  for (int x : word) {
    int rho = content_of(prefix, x) - content_of(prefix, x + 1);
    if (rho < 2) throw std::logic_error("stepwise: walk step is not a descent");
    RatFunc inv_rho = quantum_int(rho).inverse();
    std::map<Tableau, Cell> next;
    auto bump = [&next](const Tableau& u, const RatFunc& c, long long m) {
      auto& cell = next[u];
      cell.coeff += c;
      cell.mult += m;
    };
    for (const auto& [v, cell] : state) {
      Node nx = v.node_of(x);
      Node nx1 = v.node_of(x + 1);
      if (nx.row == nx1.row) {
        bump(v, cell.coeff * q, cell.mult);
      } else {
        Tableau swapped = apply(v, perm_gen(module.n(), x));
        if (nx.row < nx1.row) {
          bump(swapped, cell.coeff, cell.mult);
        } else {
          bump(swapped, cell.coeff * q, cell.mult);
          bump(v, cell.coeff * qm1, cell.mult);
        }
      }
      bump(v, cell.coeff * inv_rho, cell.mult);
    }
    state = std::move(next);
    long long count = 0;
    for (const auto& [v, cell] : state) count += cell.mult;
    out.term_count_trace.push_back(count);
    out.peak_terms = std::max(out.peak_terms, count);
    prefix = apply(prefix, perm_gen(module.n(), x));
  }
  if (prefix != t) throw std::logic_error("stepwise: walk did not reach the target tableau");

  out.f = SpechtVector(module.shape());
  for (const auto& [v, cell] : state) {
    if (cell.coeff.is_zero()) continue;
    if (is_standard(v)) {
      out.f.add_term(v, cell.coeff);
    } else {
      const SpechtVector& sv = module.straighten(v);
      for (const auto& [u, c] : sv.terms) out.f.add_term(u, cell.coeff * c);
    }
  }
  assert_unitriangular(out.f, t);
  return out;
}

SpechtVector row_step(SpechtModule& module, const SpechtVector& f_tb, const Tableau& t_b,
                      int b, int beta) {
  if (beta == b) return f_tb;
  if (beta < b) throw std::invalid_argument("row_step: beta >= b required");
  // Row holding b+1 must be exactly b+1..beta.
  Node first = t_b.node_of(b + 1);
  int row_len = t_b.shape.part(first.row);
  if (first.col != 1 || row_len != beta - b)
    throw std::invalid_argument("row_step: row does not hold b+1..beta");
  for (int x = 0; x < row_len; ++x)
    if (t_b.at(first.row, x + 1) != b + 1 + x)
      throw std::invalid_argument("row_step: row does not hold b+1..beta");
  int r = content_of(t_b, b) - content_of(t_b, beta);
  if (r < 2)
    throw std::invalid_argument("row_step: radial distance 1; the start is a Garnir tableau");
  int n = module.n();
  HeckeElement tail = HeckeElement::unit(n);
  for (int x = b + 1; x <= beta - 1; ++x) tail = hecke_add(tail, t_range(n, b, x));
  HeckeElement h = hecke_add(t_range(n, b, beta), hecke_scale(tail, quantum_int(r).inverse()));
  return module.act_hecke(f_tb, h);
}

FatHookResult fat_hook_vector(SpechtModule& module) {
  const Partition& shape = module.shape();
  std::vector<int> sizes;
  for (int p : shape.parts)
    if (sizes.empty() || sizes.back() != p) sizes.push_back(p);
  FatHookResult out;
  Tableau top = superstandard(shape);
  if (sizes.size() <= 1) {
    out.f = SpechtVector::basis_vector(top);
    out.big_f = SpechtVector(shape);
    out.t_n = top;
    out.r = 0;
    return out;
  }
  if (sizes.size() != 2) throw std::invalid_argument("fat_hook_vector: not a fat hook");
  int lambda1 = sizes[0], lambda2 = sizes[1];
  int k1 = 0;
  while (k1 < shape.rows() && shape.parts[k1] == lambda1) ++k1;
  int k2 = shape.rows() - k1;
  int n = module.n();
  int a = top.at(k1, lambda1);
  out.r = lambda1 - lambda2 + k2;
  out.t_n = apply(top, sigma_perm(n, a, n));

  long events = module.straighten_events();
  SpechtVector big_f =
      module.act_hecke(SpechtVector::basis_vector(top), row_sum_element(shape, k1 + 1, n));
  for (int i = k1 + 2; i <= k1 + k2; ++i) {
    int a_i = top.at(i - 1, shape.part(i - 1));
    SpechtVector e_ai = SpechtVector::basis_vector(apply(top, sigma_perm(n, a, a_i)));
    SpechtVector inner = specht_sub(e_ai, specht_scale(big_f, q_value()));
    big_f = module.act_hecke(inner, row_sum_element(shape, i, n));
  }
  if (module.straighten_events() != events)
    throw std::logic_error("fat_hook_vector: recursion produced a nonstandard index");
  out.big_f = big_f;
  out.f = specht_add(SpechtVector::basis_vector(out.t_n),
                     specht_scale(big_f, quantum_int(out.r).inverse()));
  assert_unitriangular(out.f, out.t_n);
  return out;
}

FnElement build_fn_element(const Partition& shape, const Node& node, int ambient_rank) {
  auto rem = removable_nodes(shape);
  size_t j0 = 0;
  while (j0 < rem.size() && rem[j0] != node) ++j0;
  if (j0 == rem.size()) throw std::invalid_argument("build_fn_element: node not removable");
  int n = shape.n();
  int rank = ambient_rank > 0 ? ambient_rank : n;
  Tableau top = superstandard(shape);

  FnElement out;
  out.node = node;
  out.t_n = james_murphy_tableau(shape, node);
  out.p = HeckeElement::unit(rank);
  for (size_t j = j0 + 1; j < rem.size(); ++j) out.below.push_back(rem[j]);

  int c_prev = top.at(node);
  int k_prev = node.row;
  for (const Node& nd : out.below) {
    int c_next = top.at(nd);
    int steps = nd.row - k_prev;
    int r = content(node) - content(nd);
    out.radials.push_back(r);
    HeckeElement phi = row_sum_element(shape, k_prev + 1, rank);
    for (int i = 2; i <= steps; ++i) {
      HeckeElement head = t_range(rank, c_prev, c_prev + (i - 1) * nd.col);
      phi = hecke_mul(hecke_sub(head, hecke_scale(phi, q_value())),
                      row_sum_element(shape, k_prev + i, rank));
    }
    out.f_elems.push_back(phi);
    HeckeElement bracket = hecke_add(t_range(rank, c_prev, c_next),
                                     hecke_scale(phi, quantum_int(r).inverse()));
    out.p = hecke_mul(out.p, bracket);
    out.brackets.push_back(std::move(bracket));
    c_prev = c_next;
    k_prev = nd.row;
  }
  return out;
}

GeneralFnResult general_fn(SpechtModule& module, const Node& node) {
  GeneralFnResult out;
  out.element = build_fn_element(module.shape(), node, module.n());
  long events = module.straighten_events();
  SpechtVector f = SpechtVector::basis_vector(module.top_tableau());
  for (const HeckeElement& bracket : out.element.brackets) f = module.act_hecke(f, bracket);
  if (module.straighten_events() != events)
    throw std::logic_error("general_fn: recursion produced a nonstandard index");
  out.f = std::move(f);
  assert_unitriangular(out.f, out.element.t_n);
  return out;
}

GeneralFtResult general_ft(SpechtModule& module, const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("general_ft: tableau not standard");
  GeneralFtResult out;
  out.p = HeckeElement::unit(module.n());
  SpechtVector f = SpechtVector::basis_vector(module.top_tableau());
  for (int i = module.n(); i >= 1; --i) {
    Tableau restricted = restrict_tableau(t, i);
    FnElement elem = build_fn_element(restricted.shape, restricted.node_of(i), module.n());
    for (const HeckeElement& bracket : elem.brackets) f = module.act_hecke(f, bracket);
    out.p = hecke_mul(out.p, elem.p);
    out.p_factors.push_back(std::move(elem.p));
  }
  out.f = std::move(f);
  assert_unitriangular(out.f, t);
  return out;
}

std::vector<RatFunc> gamma_vector(SpechtModule& module) {
  const auto& basis = module.basis();
  std::vector<RatFunc> gammas(basis.size());
  RatFunc g0 = RatFunc::one();
  for (int p : module.shape().parts) g0 *= quantum_factorial(p);
  gammas[0] = g0;
  for (size_t k = 1; k < basis.size(); ++k) {
    const Tableau& t = basis[k];
    bool found = false;
    for (int i = 1; i < module.n(); ++i) {
      if (t.row_of(i) <= t.row_of(i + 1)) continue;  // ascents only
      Tableau s = apply(t, perm_gen(module.n(), i));
      int rho = content_of(t, i + 1) - content_of(t, i);
      RatFunc candidate =
          gammas[module.index_of(s)] * seminormal_ascent_coefficient(rho);
      if (!found) {
        gammas[k] = candidate;
        found = true;
      } else if (!(gammas[k] == candidate)) {
        throw std::logic_error("gamma_vector: ascent paths disagree");
      }
    }
    if (!found) throw std::logic_error("gamma_vector: no ascent from a non-maximal tableau");
  }
  return gammas;
}

Method parse_method(const std::string& name) {
  if (name == "fast") return Method::Fast;
  if (name == "stepwise") return Method::Stepwise;
  if (name == "projector") return Method::Projector;
  if (name == "gram-schmidt") return Method::GramSchmidt;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Fast: return "fast";
    case Method::Stepwise: return "stepwise";
    case Method::Projector: return "projector";
    case Method::GramSchmidt: return "gram-schmidt";
  }
  return "?";
}

namespace {

std::vector<std::vector<RatFunc>> invert_unitriangular(
    const std::vector<std::vector<RatFunc>>& m) {
  size_t dim = m.size();
  std::vector<std::vector<RatFunc>> inv(dim, std::vector<RatFunc>(dim, RatFunc::zero()));
  for (size_t i = 0; i < dim; ++i) {
    inv[i][i] = RatFunc::one();
    for (size_t j = 0; j < i; ++j) {
      if (m[i][j].is_zero()) continue;
      // row_i(inv) -= M[i][j] * row_j(inv)
      for (size_t k = 0; k <= j; ++k)
        if (!inv[j][k].is_zero()) inv[i][k] -= m[i][j] * inv[j][k];
    }
  }
  return inv;
}

std::vector<std::vector<RatFunc>> rows_to_matrix(SpechtModule& module,
                                                 const std::vector<SpechtVector>& fs) {
  std::vector<std::vector<RatFunc>> m(fs.size(),
                                      std::vector<RatFunc>(module.dim(), RatFunc::zero()));
  for (size_t i = 0; i < fs.size(); ++i)
    for (const auto& [t, c] : fs[i].terms) m[i][module.index_of(t)] = c;
  return m;
}

}  // namespace

BaseChange base_change(SpechtModule& module, Method method) {
  if (method == Method::GramSchmidt) {
    BaseChange seed = base_change(module, Method::Fast);
    return gram_schmidt(module, [&module, &seed](const SpechtVector& u, const SpechtVector& v) {
      return bilinear_form(module, seed, u, v);
    });
  }
  BaseChange bc;
  bc.shape = module.shape();
  bc.order = module.basis();
  std::vector<SpechtVector> fs;
  fs.reserve(module.dim());
  for (const Tableau& t : module.basis()) {
    switch (method) {
      case Method::Fast: fs.push_back(general_ft(module, t).f); break;
      case Method::Stepwise: fs.push_back(seminormal_stepwise(module, t).f); break;
      case Method::Projector: fs.push_back(seminormal_projector(module, t)); break;
      case Method::GramSchmidt: break;  // handled above
    }
  }
  bc.m = rows_to_matrix(module, fs);
  bc.minv = invert_unitriangular(bc.m);
  bc.gammas = gamma_vector(module);
  return bc;
}

RatFunc bilinear_form(SpechtModule& module, const BaseChange& bc, const SpechtVector& u,
                      const SpechtVector& v) {
  if (!(u.shape == module.shape()) || !(v.shape == module.shape()))
    throw std::invalid_argument("bilinear_form: shape mismatch");
  size_t dim = bc.order.size();
  // f-coordinates of u and v: a = u Minv, b = v Minv.
  std::vector<RatFunc> a(dim, RatFunc::zero()), b(dim, RatFunc::zero());
  for (const auto& [t, c] : u.terms) {
    int s = module.index_of(t);
    for (size_t r = 0; r <= static_cast<size_t>(s); ++r)
      if (!bc.minv[s][r].is_zero()) a[r] += c * bc.minv[s][r];
  }
  for (const auto& [t, c] : v.terms) {
    int s = module.index_of(t);
    for (size_t r = 0; r <= static_cast<size_t>(s); ++r)
      if (!bc.minv[s][r].is_zero()) b[r] += c * bc.minv[s][r];
  }
  RatFunc out;
  for (size_t r = 0; r < dim; ++r)
    if (!a[r].is_zero() && !b[r].is_zero()) out += a[r] * b[r] * bc.gammas[r];
  return out;
}

std::vector<std::vector<RatFunc>> gram_matrix(SpechtModule& module, const BaseChange& bc) {
  size_t dim = bc.order.size();
  std::vector<std::vector<RatFunc>> g(dim, std::vector<RatFunc>(dim, RatFunc::zero()));
  for (size_t s = 0; s < dim; ++s)
    for (size_t t = s; t < dim; ++t) {
      RatFunc val;
      for (size_t r = 0; r < dim; ++r)
        if (!bc.minv[s][r].is_zero() && !bc.minv[t][r].is_zero())
          val += bc.minv[s][r] * bc.minv[t][r] * bc.gammas[r];
      g[s][t] = val;
      g[t][s] = val;
    }
  (void)module;
  return g;
}

BaseChange gram_schmidt(SpechtModule& module, const FormFn& form) {
  BaseChange bc;
  bc.shape = module.shape();
  bc.order = module.basis();
  std::vector<SpechtVector> fs;
  std::vector<RatFunc> gammas;
  for (int k = 0; k < module.dim(); ++k) {
    SpechtVector f = SpechtVector::basis_vector(module.tableau_at(k));
    for (int j = 0; j < k; ++j) {
      RatFunc c = form(fs[j], f);
      if (c.is_zero()) continue;
      f = specht_sub(f, specht_scale(fs[j], c / gammas[j]));
    }
    RatFunc norm = form(f, f);
    if (norm.is_zero()) throw std::logic_error("gram_schmidt: zero norm over K");
    assert_unitriangular(f, module.tableau_at(k));
    fs.push_back(std::move(f));
    gammas.push_back(std::move(norm));
  }
  bc.m = rows_to_matrix(module, fs);
  bc.minv = invert_unitriangular(bc.m);
  bc.gammas = std::move(gammas);
  return bc;
}

namespace {

CyclotomicFactorization predicted_product(const std::vector<int>& radials) {
  CyclotomicFactorization out;
  out.unit = Rat(1);
  std::map<long, int> mults;
  for (int r : radials)
    for (int d = 2; d <= r; ++d)
      if (r % d == 0) ++mults[d];
  for (const auto& [d, m] : mults) out.factors.emplace_back(d, m);
  return out;
}

}  // namespace

DenominatorCertificate denominator_certificate(SpechtModule& module, const SpechtVector& f,
                                               const Tableau& t,
                                               const std::vector<int>& predicted_radials) {
  (void)module;
  DenominatorCertificate cert;
  cert.tableau = t;
  cert.predicted_radials = predicted_radials;
  cert.predicted = predicted_product(predicted_radials);
  RatFunc clear = RatFunc::one();
  for (int r : predicted_radials) clear *= quantum_int(r);
  for (const auto& [s, c] : f.terms) {
    if (c.den().degree() == 0 && c.den().coeff(0) == 1) continue;
    DenominatorCertificate::Entry entry;
    entry.index = s;
    entry.factorization = factor_cyclotomic(poly_to_laurent(c.den()));
    if (!entry.factorization.is_cyclotomic_product) cert.all_cyclotomic = false;
    else if (!cyclotomic_divides(entry.factorization.factorization, cert.predicted))
      cert.all_divide_predicted = false;
    if (!(c * clear).is_laurent()) cert.clears_after_multiplying = false;
    cert.denominators.push_back(std::move(entry));
  }
  return cert;
}

DenominatorCertificate denominator_certificate_at_node(SpechtModule& module, const Node& node) {
  GeneralFnResult fn = general_fn(module, node);
  return denominator_certificate(module, fn.f, fn.element.t_n, fn.element.radials);
}

}  // namespace seminormal
