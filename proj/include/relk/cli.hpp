#pragma once

// The relk command line: subcommands over the catalog or an input document.
// Exit status 0 when everything checked holds, 1 when a check fails, 2 on
// input errors.

#include "relk/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace relk {

namespace cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  SessionConfig cfg;
  std::string format = "text";
  std::string example;
  std::string input;

  std::string ring = "Q";
  std::string op = "show";
  std::string a, b, matrix, witt, x, ideal, cover;
  std::size_t n = 1;
  std::string functor = "nu";
  std::size_t degree = 2;
  int floor = -3;
  bool unaugmented = false;
  std::vector<std::string> suites;
  bool all = false;
};

class Session {
 public:
  explicit Session(const Options& o) : o_(o), fmt_(parse_format(o.format)) {
    if (!o.input.empty()) doc_ = parse_input_file(o.input);
    if (o.cfg.N < 1) throw InputError(0, "--N must be at least 1");
    if (o.cfg.D < 1) throw InputError(0, "--D must be at least 1");
  }

  const Options& opt() const { return o_; }
  Format format() const { return fmt_; }

  AnyExtension extension() const {
    if (o_.example.empty()) throw InputError(0, "--example is required");
    if (doc_)
      if (auto it = doc_->extensions.find(o_.example); it != doc_->extensions.end()) return it->second;
    return catalog().extension(o_.example);
  }

  std::shared_ptr<const ModExtension> finite_extension(const char* what) const {
    auto e = extension();
    if (e.index() != 0) throw InputError(0, std::string(what) + " is computed for extensions of finite rings only");
    return std::get<0>(e);
  }

  std::vector<std::pair<std::string, Cover>> document_covers() const {
    std::vector<std::pair<std::string, Cover>> out;
    if (doc_)
      for (const auto& n : doc_->cover_order) out.emplace_back(n, doc_->covers.at(n).cover);
    return out;
  }

  AnyRing ring(const std::string& name) const {
    if (doc_) return resolve_ring(*doc_, name);
    if (auto it = catalog().doc.rings.find(name); it != catalog().doc.rings.end()) return it->second;
    return resolve_ring(Document{}, name);
  }

  /// A cover by name (input document, then catalog) or as a list of elements of A.
  std::pair<std::string, Cover> cover(const RingPtr<ModularBase>& a) const {
    if (o_.cover.empty()) throw InputError(0, "--cover is required");
    for (const Document* d : {doc_ ? &*doc_ : nullptr, &catalog().doc})
      if (d)
        if (auto it = d->covers.find(o_.cover); it != d->covers.end()) return {o_.cover, it->second.cover};
    std::vector<ModElement> el;
    for (const auto& s : detail::split_list(o_.cover)) el.push_back(parse_element(a, s));
    return {"{" + o_.cover + "}", make_cover(a, el)};
  }

 private:
  Options o_;
  Format fmt_;
  std::optional<Document> doc_;
};

template <class Base>
std::vector<Element<Base>> parse_elements(const RingPtr<Base>& r, const std::string& list) {
  std::vector<Element<Base>> out;
  if (detail::trim(list).empty()) return out;
  for (const auto& s : detail::split_list(list)) out.push_back(parse_element(r, s));
  return out;
}

/// Rows separated by ';', entries by ','.
template <class Base>
Matrix<Element<Base>> parse_matrix(const RingPtr<Base>& r, const std::string& text) {
  std::vector<std::vector<Element<Base>>> rows;
  for (const auto& row : detail::split_list(text, ';')) rows.push_back(parse_elements(r, row));
  if (rows.empty()) throw InputError(0, "empty matrix");
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw InputError(0, "matrix must be square");
  Matrix<Element<Base>> m(rows.size(), rows.size(), r->zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

template <class Base>
WittVector<Base> parse_witt(const RingPtr<Base>& r, const std::string& list, std::size_t level) {
  auto a = parse_elements(r, list);
  if (a.size() > level) throw InputError(0, "more coefficients than the truncation level " + std::to_string(level));
  a.resize(level, r->zero());
  return WittVector<Base>::from_coefficients(r, a);
}

template <class T>
Json strings(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

inline std::string tuple(const std::vector<QElement>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].str();
  return s + ")";
}

inline Json coords_json(const std::vector<std::int64_t>& c) {
  Json a = Json::array();
  for (auto v : c) a.push_back(v);
  return a;
}

// ------------------------------------------------------------------ witt

template <class Base>
int witt_command(const Session& s, const RingPtr<Base>& r, Json& out) {
  const auto& o = s.opt();
  const std::size_t level = o.cfg.N;
  using W = WittVector<Base>;
  out["ring"] = r->name();
  out["N"] = level;
  out["op"] = o.op;
  W result;
  if (o.op == "basic") {
    result = W::basic(parse_element(r, o.a), o.n, level);
  } else if (o.op == "almkvist") {
    const auto m = parse_matrix(r, o.matrix);
    out["matrix"] = m.str();
    result = almkvist(r, m, level);
  } else {
    const W u = parse_witt(r, o.a, level);
    out["u"] = u.str();
    if (o.op == "show") {
      result = u;
    } else if (o.op == "neg") {
      result = witt_neg(u);
    } else if (o.op == "frobenius") {
      result = frobenius(o.n, u);
    } else if (o.op == "verschiebung") {
      result = verschiebung(o.n, u);
    } else if (o.op == "factor") {
      auto a = basic_factorization(u);
      a.erase(a.begin());
      out["basic_factorization"] = strings(a);
      result = u;
    } else {
      const W v = parse_witt(r, o.b, level);
      out["v"] = v.str();
      if (o.op == "add") result = witt_add(u, v);
      else if (o.op == "sub") result = witt_sub(u, v);
      else if (o.op == "mul") result = witt_mul(u, v);
      else throw InputError(0, "unknown witt op '" + o.op + "'");
    }
  }
  out["result"] = result.str();
  if constexpr (!Base::finite) out["ghost"] = tuple(ghost(result));
  return kPass;
}

// ------------------------------------------------------------------ pic / npic / act

inline int pic_command(const Session& s, Json& out) {
  const auto e = s.finite_extension("Pic(f)");
  const PicSequenceReport rep = verify_pic_sequence(*e, s.opt().cfg.bound);
  const PicGroup pg = pic_group(*e, s.opt().cfg.bound);
  out["extension"] = e->name();
  out["source"] = e->source()->name();
  out["target"] = e->target()->name();
  out["units_source"] = group_json(pg.units_a.structure());
  out["units_target"] = group_json(pg.units_b.structure());
  out["pic"] = group_json(pg.pic.structure());
  Json gens = Json::array();
  for (std::size_t i = 0; i < pg.pic.rank(); ++i)
    gens.push_back(Json{{"unit", pg.pic.generator(i).str()}, {"order", pg.pic.dims()[i]}});
  out["pic_generators"] = gens;
  Json checks = Json::object();
  for (const auto& c : rep.checks) checks[c.name] = c.passed ? "PASS" : "FAIL: " + c.detail;
  out["sequence"] = checks;
  out["exact"] = rep.exact();
  return rep.exact() ? kPass : kFail;
}

inline int npic_command(const Session& s, Json& out) {
  const auto& o = s.opt();
  const auto any = s.extension();
  if (any.index() == 1) {
    const auto& e = *std::get<1>(any);
    out["extension"] = e.name();
    out["D"] = o.cfg.D;
    out["nu_dimension"] = nu_dimension(e.target(), o.cfg.D);
    out["npic_dimension"] = npic_dimension(e, o.cfg.D);
    out["npic"] = "Q^" + std::to_string(npic_dimension(e, o.cfg.D));
    return kPass;
  }
  const auto& e = *std::get<0>(any);
  const NilUnitGroup nu = nu_group(e.target(), e.target_nilradical(), o.cfg.D, o.cfg.bound);
  const NilUnitGroup g = npic_group(e, o.cfg.D, o.cfg.bound);
  out["extension"] = e.name();
  out["D"] = o.cfg.D;
  out["nu_target"] = group_json(nu.structure());
  out["npic"] = group_json(g.structure());
  Json gens = Json::array();
  for (std::size_t i = 0; i < g.rank(); ++i)
    gens.push_back(Json{{"class", g.generator(i).str()}, {"order", g.dims()[i]}});
  out["npic_generators"] = gens;
  return kPass;
}

template <class Base>
int act_command(const Session& s, const Extension<Base>& e, Json& out) {
  const auto& o = s.opt();
  const std::size_t d = o.cfg.D;
  auto xs = parse_elements(e.target(), o.x);
  if (xs.size() > d) throw InputError(0, "--x has more than D coefficients");
  xs.resize(d, e.target()->zero());
  const NilUnit<Base> x = make_nil_unit(e.target(), xs);
  WittVector<Base> w = !o.witt.empty() ? parse_witt(e.source(), o.witt, d)
                                       : WittVector<Base>::basic(parse_element(e.source(), o.a.empty() ? "1" : o.a), o.n, d);
  const NilUnit<Base> y = witt_action(e, w, x);
  out["extension"] = e.name();
  out["D"] = d;
  out["witt"] = w.str();
  out["x"] = x.str();
  out["result"] = y.str();
  if constexpr (Base::finite) {
    const NilUnitGroup g = npic_group(e, d, o.cfg.bound);
    out["npic"] = group_json(g.structure());
    out["class_x"] = coords_json(g.coordinates(x));
    out["class_result"] = coords_json(g.coordinates(y));
    out["trivial_in_npic"] = g.is_identity(y);
    const auto m = continuity_bound(e, g, x, d + 1);
    out["continuity_bound"] = m ? Json(*m) : Json(nullptr);
  } else {
    const NilLogChart chart(e.target(), e.target_nilradical(), d);
    out["log_x"] = NilLogChart::log(x).str();
    out["log_result"] = NilLogChart::log(y).str();
  }
  return kPass;
}

// ------------------------------------------------------------------ k0 / excision / subintegral

inline int k0_command(const Session& s, Json& out) {
  const auto e = s.finite_extension("K0(f)");
  const auto& o = s.opt();
  const PicGroup pg = pic_group(*e, o.cfg.bound);
  out["extension"] = e->name();
  out["k0"] = group_json(pg.pic.structure());
  out["model"] = "B^x / f(A^x) (semilocal: K0(f) = Pic(f))";
  if (o.matrix.empty()) return kPass;
  const K0Triple<ModularBase> t = boundary(*e, parse_matrix(e->target(), o.matrix));
  const ModElement u = reduce(*e, t, o.cfg.bound), det = det_map(t);
  const bool agree = same_class(*e, u, det);
  out["alpha"] = t.alpha.str();
  out["reduce"] = u.str();
  out["det"] = det.str();
  out["class"] = coords_json(pg.pic.coordinates(u));
  out["reduce_equals_det"] = agree;
  Json lam = Json::array();
  for (std::size_t i = 0; i <= t.size() + 1; ++i) {
    const auto li = lambda_op(i, t, e->target());
    lam.push_back(Json{{"i", i}, {"rank", li.size()}, {"det", li.size() ? det_map(li).str() : "1"}});
  }
  out["lambda"] = lam;
  return agree ? kPass : kFail;
}

inline int excision_command(const Session& s, Json& out) {
  const auto& o = s.opt();
  Json rows = Json::array();
  bool ok = true;
  auto add = [&](const ExcisionReport& rep) {
    ok = ok && rep.ideal_ok && rep.iso;
    rows.push_back(Json{{"config", rep.config},
                        {"k0_f", group_json(rep.k0_f)},
                        {"k0_fbar", group_json(rep.k0_fbar)},
                        {"ideal_shared", rep.ideal_ok},
                        {"isomorphism", rep.iso},
                        {"detail", rep.detail}});
  };
  if (!o.ideal.empty()) {
    const auto e = s.finite_extension("excision");
    add(excision_check(*e, parse_elements(e->source(), o.ideal), {}, o.cfg.bound));
  } else {
    for (const auto& c : catalog().excision) {
      if (!o.example.empty() && c.extension != o.example) continue;
      const auto e = catalog().finite(c.extension);
      std::vector<ModElement> ideal;
      for (const auto& g : c.ideal) ideal.push_back(parse_element(e->source(), g));
      add(excision_check(*e, ideal, c.name, o.cfg.bound));
    }
    if (rows.empty()) throw InputError(0, "no excision configuration for '" + o.example + "' (give --ideal)");
  }
  out["configurations"] = rows;
  return ok ? kPass : kFail;
}

inline int subintegral_command(const Session& s, Json& out) {
  const auto e = s.finite_extension("the subintegral comparison");
  const SubintegralReport rep = subintegral_report(*e, 50, s.opt().cfg.seed, s.opt().cfg.bound);
  out["extension"] = e->name();
  out["subintegral"] = rep.subintegral;
  if (!rep.subintegral) {
    out["declined"] = rep.reason;
    return kPass;
  }
  out["components"] = {rep.components_a, rep.components_b};
  out["k0_kernel"] = group_json(rep.kernel_k0);
  out["k0_cokernel"] = group_json(rep.cokernel_k0);
  out["pic"] = group_json(rep.pic);
  out["triples_checked"] = rep.triples_checked;
  out["det_isomorphism"] = rep.det_iso;
  out["sequence_exact"] = rep.sequence_exact;
  out["k0_f_equals_pic"] = rep.passed();
  return rep.passed() ? kPass : kFail;
}

// ------------------------------------------------------------------ cech / negk

inline int cech_command(const Session& s, Json& out) {
  const auto e = s.finite_extension("the Cech complex");
  const auto& o = s.opt();
  const auto [name, cover] = s.cover(e->source());
  const CechFunctor f = parse_functor(o.functor);
  const CechComplex cx = build_complex(*e, cover, f, o.degree, !o.unaugmented, o.cfg.bound);
  const ExactnessReport rep = verify_exactness(cx);
  out["extension"] = e->name();
  out["cover"] = name;
  out["functor"] = to_string(f);
  out["degree"] = o.degree;
  out["augmented"] = !o.unaugmented;
  Json terms = Json::array(), hom = Json::array();
  for (const auto& t : cx.terms) terms.push_back(group_json(t));
  for (const auto& h : rep.homology) hom.push_back(group_json(h));
  out["terms"] = terms;
  out["homology"] = hom;
  out["exact"] = rep.exact();
  if (o.unaugmented) return kPass;
  return rep.exact() ? kPass : kFail;
}

inline int negk_command(const Session& s, Json& out) {
  const auto e = s.finite_extension("negative K");
  const auto& o = s.opt();
  const NegKTable t = neg_k_table(*e, o.floor, o.cfg.bound);
  out["extension"] = e->name();
  out["components"] = t.components;
  Json rows = Json::object();
  for (auto it = t.groups.rbegin(); it != t.groups.rend(); ++it) rows["K_" + std::to_string(it->first)] = group_json(it->second);
  out["table"] = rows;
  const AnodalResult an = is_anodal(*e, o.cfg.bound);
  out["anodal"] = an.anodal;
  if (an.witness) out["anodal_witness"] = an.witness->str();
  return kPass;
}

// ------------------------------------------------------------------ verify

inline int verify_command(const Session& s, std::ostream& os) {
  const auto& o = s.opt();
  VerifyTargets t;
  if (!o.all) t.suites = o.suites;
  if (!o.example.empty()) {
    t.extension = s.finite_extension("verify");
    t.example = o.example;
    t.covers = s.document_covers();
  }
  if (!o.cover.empty()) t.cover = o.cover;
  if (t.cover && !t.example) throw InputError(0, "--cover needs --example");
  for (const auto& x : t.suites) canonical_suite(x);
  std::vector<CheckResult> rs;
  if (s.format() == Format::Text) {
    rs = run_verify(t, o.cfg, [&](const CheckResult& r) { os << check_line(r) << std::endl; });
  } else {
    rs = run_verify(t, o.cfg);
  }
  const auto failed = std::count_if(rs.begin(), rs.end(), [](const CheckResult& r) { return !r.pass; });
  const auto skipped = std::count_if(rs.begin(), rs.end(), [](const CheckResult& r) { return r.skipped; });
  if (s.format() == Format::Text) {
    os << (failed ? "FAILED " : "ALL PASSED ") << rs.size() - static_cast<std::size_t>(failed + skipped) << "/"
       << rs.size();
    if (skipped) os << " (" << skipped << " skipped)";
    os << "\n";
  } else {
    emit(os, verify_json(rs, o.cfg), Format::Json);
  }
  return failed ? kFail : kPass;
}

}  // namespace cli

/// Runs the command line; argv[0] is the program name.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  cli::Options o;
  CLI::App app{"Relative Picard groups, relative K0, NPic and big Witt vectors over finite and rational rings", "relk"};
  app.require_subcommand(1);
  auto global = [&](CLI::App* c) {
    c->add_option("--N", o.cfg.N, "Witt truncation level")->capture_default_str();
    c->add_option("--D", o.cfg.D, "nil truncation degree")->capture_default_str();
    c->add_option("--bound", o.cfg.bound, "enumeration bound")->capture_default_str();
    c->add_option("--seed", o.cfg.seed, "random seed")->capture_default_str();
    c->add_option("--format", o.format, "text | json-like")->capture_default_str();
    c->add_option("--example", o.example, "extension name (input document, then catalog)");
    c->add_option("--input", o.input, "input document");
  };
  std::map<std::string, CLI::App*> sub;
  auto add = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    global(c);
    sub[name] = c;
    return c;
  };
  auto* witt = add("witt", "big Witt vector arithmetic");
  witt->add_option("--ring", o.ring, "ring name")->capture_default_str();
  witt->add_option("--op", o.op, "show|add|sub|mul|neg|frobenius|verschiebung|basic|almkvist|factor")->capture_default_str();
  witt->add_option("--a", o.a, "coefficients a1,...,aN (or the element a for basic)");
  witt->add_option("--b", o.b, "coefficients of the second vector");
  witt->add_option("--n", o.n, "index for frobenius, verschiebung, basic")->capture_default_str();
  witt->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
  add("pic", "Pic(f) = B^x / f(A^x) and the units-Pic sequence");
  add("npic", "NPic_D(f)");
  auto* act = add("act", "W(A) acting on a nil-unit of B");
  act->add_option("--witt", o.witt, "Witt coefficients over A");
  act->add_option("--a", o.a, "a in A for the basic vector 1 - a t^m");
  act->add_option("--m", o.n, "m for the basic vector")->capture_default_str();
  act->add_option("--x", o.x, "coefficients c1,...,cD of 1 + c1 t + ... over B")->required();
  auto* k0 = add("k0", "K0(f) and the reduction of a triple [A^n, alpha, A^n]");
  k0->add_option("--matrix", o.matrix, "alpha in GL_n(B): rows separated by ';'");
  auto* exc = add("excision", "K0(f) against K0(f mod I)");
  exc->add_option("--ideal", o.ideal, "generators of I in A");
  add("subintegral", "K0(f) = Pic(f) for subintegral f");
  auto* cech = add("cech", "Cech complex over a cover of Spec(A)");
  cech->add_option("--cover", o.cover, "cover name or elements s0,s1,...")->required();
  cech->add_option("--functor", o.functor, "nu | pic | npic")->capture_default_str();
  cech->add_option("--degree", o.degree, "nil truncation degree")->capture_default_str();
  cech->add_flag("--unaugmented", o.unaugmented, "drop the F(A) term");
  auto* negk = add("negk", "K_n(f) for n <= 0 over a local A");
  negk->add_option("--floor", o.floor, "lowest degree listed")->capture_default_str();
  auto* verify = add("verify", "run the property suites");
  verify->add_option("--suite", o.suites, "suite name (repeatable)");
  verify->add_flag("--all", o.all, "every suite");
  verify->add_option("--cover", o.cover, "cover elements for the cech suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return cli::kInputError;
  }

  try {
    const cli::Session s(o);
    if (sub["verify"]->parsed()) {
      if (!o.all && o.suites.empty()) throw InputError(0, "verify needs --suite or --all");
      return cli::verify_command(s, out);
    }
    Json j = Json::object();
    int code = cli::kPass;
    if (sub["witt"]->parsed()) {
      code = std::visit([&](const auto& r) { return cli::witt_command(s, r, j); }, s.ring(o.ring));
    } else if (sub["pic"]->parsed()) {
      code = cli::pic_command(s, j);
    } else if (sub["npic"]->parsed()) {
      code = cli::npic_command(s, j);
    } else if (sub["act"]->parsed()) {
      code = std::visit([&](const auto& e) { return cli::act_command(s, *e, j); }, s.extension());
    } else if (sub["k0"]->parsed()) {
      code = cli::k0_command(s, j);
    } else if (sub["excision"]->parsed()) {
      code = cli::excision_command(s, j);
    } else if (sub["subintegral"]->parsed()) {
      code = cli::subintegral_command(s, j);
    } else if (sub["cech"]->parsed()) {
      code = cli::cech_command(s, j);
    } else if (sub["negk"]->parsed()) {
      code = cli::negk_command(s, j);
    }
    emit(out, j, s.format());
    return code;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return cli::kInputError;
  }
}

}  // namespace relk
