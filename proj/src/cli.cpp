// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/cli.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "agsum/connected_sum.hpp"
#include "agsum/decompose.hpp"
#include "json.hpp"

namespace agsum::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

SourcePos step_pos(SourcePos p, std::string_view s) {
  for (char c : s) {
    if (c == '\n') {
      ++p.line;
      p.col = 1;
    } else {
      ++p.col;
    }
  }
  return p;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> w;
  for (std::string x; in >> x;) w.push_back(x);
  return w;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string paren(const HilbertFunction& h) {
  std::string s = "(";
  for (int i = 0; i < h.length(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

json vec_json(const Vec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

// What the Lefschetz commands act on.
struct Current {
  std::shared_ptr<const InverseSystem> sys;
  VarTable vars;  // for printing sys elements
  std::shared_ptr<const GradedSubquotient> sub;
  std::string label;

  bool empty() const { return !sys && !sub; }
  GradedAlgebra algebra() const { return sys ? sys->algebra() : sub->algebra(); }
};

struct MapDef {
  std::string source, target;
  std::vector<std::pair<int, std::string>> images;  // variable -> poly text
  SourcePos pos;
};

struct Block {
  std::string statement;
  json data = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    if (opt.field) field_ = parse_field(*opt.field);
  }

  // Declarations return nothing; commands return a block.
  std::optional<Block> execute(const Statement& st);

 private:
  Poly named_or_inline(const std::string& arg, Side side, SourcePos pos) const;
  std::shared_ptr<const InverseSystem> system_of(const std::vector<std::string>& args, std::size_t from,
                                                 SourcePos pos) const;
  OrientedSurjection surjection(const std::string& name) const;
  std::string show(const Poly& p) const { return to_string(p, vars_.grading, vars_.names); }
  void need_vars() const {
    if (!have_vars_) throw Error("declare variables first (vars x:1 y:1 ...)");
  }
  void set_vars(VarTable v);
  void set_current(std::shared_ptr<const InverseSystem> s, std::string label);
  void set_current(std::shared_ptr<const GradedSubquotient> s, std::string label);
  Current target(const std::vector<std::string>& w, SourcePos pos) const;
  Vec explicit_form(const Current& c) const;

  void declare_poly(const std::string& name, const std::string& text, SourcePos pos);
  void declare_map(const std::string& rest, SourcePos pos);

  void cmd_ann(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_hilbert(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_socle(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_thom(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_cs_check(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_cs_build(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_fiber_build(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_structural(Block& b, const std::vector<std::string>& w, bool sum);
  void cmd_blowup(Block& b, const std::vector<std::string>& w);
  void cmd_monomial_cs(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_probe(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_diag(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_lefschetz(Block& b, const std::vector<std::string>& w, SourcePos pos, const std::string& which);
  void cmd_wlp_middle(Block& b, const std::vector<std::string>& w);
  void cmd_family(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void cmd_two_block(Block& b, const std::vector<std::string>& w, SourcePos pos);
  void print_presentation(Block& b, const GradedAlgebra& a);
  void print_generic(Block& b, const GenericLefschetz& g, const std::string& key);

  const Options& opt_;
  Field field_ = Field::rationals();
  bool field_locked_ = false;
  VarTable vars_;
  bool have_vars_ = false;
  struct Named {
    Poly dual;
    SourcePos pos;
  };
  std::map<std::string, Named> polys_;
  std::map<std::string, MapDef> maps_;
  Current current_;
};

void Session::set_vars(VarTable v) {
  if (!polys_.empty() || !maps_.empty()) throw Error("variables cannot change after names are declared");
  vars_ = std::move(v);
  have_vars_ = true;
  field_locked_ = true;
}

void Session::set_current(std::shared_ptr<const InverseSystem> s, std::string label) {
  current_ = Current{std::move(s), vars_, nullptr, std::move(label)};
}

void Session::set_current(std::shared_ptr<const GradedSubquotient> s, std::string label) {
  current_ = Current{nullptr, vars_, std::move(s), std::move(label)};
}

Poly Session::named_or_inline(const std::string& arg, Side side, SourcePos pos) const {
  need_vars();
  auto it = polys_.find(arg);
  Poly p = it != polys_.end() ? it->second.dual : parse_poly(arg, vars_, field_, pos, Side::Dual);
  if (!p.is_homogeneous(vars_.grading)) throw ParseError(pos, "'" + arg + "' is not homogeneous");
  return p.with_side(side);
}

std::shared_ptr<const InverseSystem> Session::system_of(const std::vector<std::string>& args, std::size_t from,
                                                        SourcePos pos) const {
  std::vector<Poly> duals;
  for (std::size_t i = from; i < args.size(); ++i) duals.push_back(named_or_inline(args[i], Side::Dual, pos));
  if (duals.empty()) throw Error("expected at least one dual generator");
  return std::make_shared<InverseSystem>(InverseSystem::build(vars_.grading, duals));
}

OrientedSurjection Session::surjection(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw Error("unknown map '" + name + "'");
  const MapDef& m = it->second;
  auto a = system_of({m.source}, 0, m.pos);
  auto t = system_of({m.target}, 0, m.pos);
  if (m.images.empty()) return OrientedSurjection::natural(a, t);
  std::vector<Poly> images;
  for (int i = 0; i < vars_.nvars(); ++i)
    images.push_back(Poly::monomial(field_, Monomial::var(vars_.nvars(), i), Side::Ring, field_.one()));
  for (const auto& [v, text] : m.images) images[v] = parse_poly(text, vars_, field_, m.pos);
  return OrientedSurjection::from_map(a, t, images);
}

void Session::declare_poly(const std::string& name, const std::string& text, SourcePos pos) {
  need_vars();
  if (polys_.count(name) || maps_.count(name)) throw ParseError(pos, "duplicate name '" + name + "'");
  Poly p = parse_poly(text, vars_, field_, pos, Side::Dual);
  if (!p.is_homogeneous(vars_.grading)) throw ParseError(pos, "'" + name + "' is inhomogeneous");
  polys_[name] = {p, pos};
}

// map name = Src -> Tgt [via v->poly, ...]
void Session::declare_map(const std::string& rest, SourcePos pos) {
  need_vars();
  auto eq = rest.find('=');
  if (eq == std::string::npos) throw ParseError(pos, "expected 'map name = Src -> Tgt [via x->p, ...]'");
  std::string name = trim(rest.substr(0, eq));
  std::string body = rest.substr(eq + 1);
  if (!is_ident(name)) throw ParseError(pos, "bad map name '" + name + "'");
  if (polys_.count(name) || maps_.count(name)) throw ParseError(pos, "duplicate name '" + name + "'");
  MapDef m;
  m.pos = pos;
  std::string images;
  auto via = body.find(" via ");
  if (via != std::string::npos) {
    images = body.substr(via + 5);
    body = body.substr(0, via);
  }
  auto arrow = body.find("->");
  if (arrow == std::string::npos) throw ParseError(pos, "map needs 'Src -> Tgt'");
  m.source = trim(body.substr(0, arrow));
  m.target = trim(body.substr(arrow + 2));
  for (const auto& n : {m.source, m.target})
    if (!polys_.count(n)) throw ParseError(pos, "unknown name '" + n + "'");
  std::istringstream in(images);
  for (std::string item; std::getline(in, item, ',');) {
    auto a = item.find("->");
    if (a == std::string::npos) throw ParseError(pos, "image must read 'var->poly'");
    std::string v = trim(item.substr(0, a));
    int idx = vars_.lookup(v);
    if (idx < 0) throw ParseError(pos, "unknown variable '" + v + "'");
    std::string img = trim(item.substr(a + 2));
    parse_poly(img, vars_, field_, pos);  // validate now
    m.images.emplace_back(idx, img);
  }
  maps_[name] = m;
}

Current Session::target(const std::vector<std::string>& w, SourcePos pos) const {
  if (w.size() > 1) {
    Current c;
    c.sys = system_of(w, 1, pos);
    c.vars = vars_;
    c.label = "Q/Ann(" + w[1] + ")";
    return c;
  }
  if (current_.empty()) throw Error("no current algebra; name a dual generator or build one first");
  return current_;
}

Vec Session::explicit_form(const Current& c) const {
  auto named = polys_.find(*opt_.ell);
  Poly p = named != polys_.end() ? named->second.dual.with_side(Side::Ring)
                                 : parse_poly(*opt_.ell, c.vars, field_, {}, Side::Ring);
  if (c.sys) return linear_form(*c.sys, p);
  if (p.is_zero()) return zero_vec(field_, c.sub->algebra().dim(1));
  return c.sub->element_of(p);
}

std::optional<Block> Session::execute(const Statement& st) {
  std::vector<std::string> w = words(st.text);
  if (w.empty()) return std::nullopt;
  const std::string& head = w[0];
  SourcePos pos = st.pos;

  if (head == "vars") {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t i = 1; i < w.size(); ++i) {
      auto colon = w[i].find(':');
      std::string n = w[i].substr(0, colon);
      if (!is_ident(n)) throw ParseError(pos, "bad variable name '" + n + "'");
      names.push_back(n);
      weights.push_back(colon == std::string::npos ? 1 : to_int(w[i].substr(colon + 1), "a weight"));
      if (weights.back() < 1) throw ParseError(pos, "weights must be positive");
    }
    if (names.empty()) throw ParseError(pos, "vars needs at least one variable");
    set_vars(make_vars(names, weights));
    return std::nullopt;
  }
  if (head == "field") {
    if (field_locked_) throw ParseError(pos, "field must be set before vars");
    if (w.size() != 2) throw ParseError(pos, "expected 'field rat' or 'field fp:<p>'");
    field_ = parse_field(w[1]);
    return std::nullopt;
  }
  if (head == "map") {
    declare_map(st.text.substr(st.text.find("map") + 3), step_pos(pos, "map "));
    return std::nullopt;
  }
  auto eq = st.text.find('=');
  if (eq != std::string::npos && is_ident(trim(st.text.substr(0, eq)))) {
    std::string name = trim(st.text.substr(0, eq));
    declare_poly(name, st.text.substr(eq + 1), step_pos(pos, st.text.substr(0, eq + 1)));
    return std::nullopt;
  }

  Block b;
  b.statement = st.text;
  b.data["command"] = head;
  if (head == "ann") cmd_ann(b, w, pos);
  else if (head == "hilbert") cmd_hilbert(b, w, pos);
  else if (head == "socle") cmd_socle(b, w, pos);
  else if (head == "thom") cmd_thom(b, w, pos);
  else if (head == "cs-check") cmd_cs_check(b, w, pos);
  else if (head == "cs-build") cmd_cs_build(b, w, pos);
  else if (head == "fiber-build") cmd_fiber_build(b, w, pos);
  else if (head == "fiber-structural") cmd_structural(b, w, false);
  else if (head == "cs-structural") cmd_structural(b, w, true);
  else if (head == "blowup") cmd_blowup(b, w);
  else if (head == "monomial-cs") cmd_monomial_cs(b, w, pos);
  else if (head == "probe") cmd_probe(b, w, pos);
  else if (head == "diag-quadratic") cmd_diag(b, w, pos);
  else if (head == "wlp" || head == "slp" || head == "jordan") cmd_lefschetz(b, w, pos, head);
  else if (head == "wlp-middle") cmd_wlp_middle(b, w);
  else if (head == "family") cmd_family(b, w, pos);
  else if (head == "two-block") cmd_two_block(b, w, pos);
  else throw ParseError(pos, "unknown command '" + head + "'");
  return b;
}

void need_args(const std::vector<std::string>& w, std::size_t n, const char* usage) {
  if (w.size() != n + 1) throw Error(std::string("usage: ") + usage);
}

void Session::cmd_ann(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  Current c = target(w, pos);
  if (!c.sys) throw Error("ann needs an algebra given by dual generators");
  auto s = c.sys;
  int limit = s->socle_degree() + vars_.grading.max_weight();
  if (opt_.max_degree) limit = std::min(limit, *opt_.max_degree);
  json gens = json::array();
  b.line("Ann generators (degree <= " + std::to_string(limit) + "):");
  for (const Poly& g : s->min_generators()) {
    int d = g.degree(vars_.grading);
    if (d > limit) continue;
    b.line("  " + std::to_string(d) + ": " + show(g));
    gens.push_back({{"degree", d}, {"poly", show(g)}});
  }
  b.data["generators"] = gens;
  if (w.size() > 1) set_current(s, c.label);
}

void Session::cmd_hilbert(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  Current c = target(w, pos);
  HilbertFunction h = c.sys ? c.sys->hilbert() : c.sub->hilbert();
  b.line("hilbert: " + h.to_string());
  b.data["hilbert"] = h.values();
  if (c.sys) {
    json duals = json::array();
    for (const Poly& g : c.sys->duals()) duals.push_back(to_string(g, c.vars.grading, c.vars.names));
    b.data["duals"] = duals;
    b.data["vars"] = c.vars.declaration();
  }
  if (w.size() > 1) set_current(c.sys, c.label);
}

void Session::cmd_socle(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  Current c = target(w, pos);
  GradedAlgebra a = c.algebra();
  auto soc = a.socle();
  json js = json::array();
  for (std::size_t i = 0; i < soc.size(); ++i)
    if (!soc[i].empty()) {
      b.line("socle degree " + std::to_string(i) + ": dim " + std::to_string(soc[i].size()));
      js.push_back({{"degree", i}, {"dim", soc[i].size()}});
    }
  b.line("level: " + yes(a.is_level()));
  b.data["socle"] = js;
  b.data["level"] = a.is_level();
}

void Session::cmd_thom(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 2, "thom F H");
  Poly F = named_or_inline(w[1], Side::Dual, pos), H = named_or_inline(w[2], Side::Dual, pos);
  auto t = thom_class(vars_.grading, F, H);
  if (!t) {
    b.line("no Thom class: Q/Ann(F) -> Q/Ann(H) is not a well-defined surjection");
    b.data["tau"] = nullptr;
    return;
  }
  b.line("tau = " + show(t->tau));
  json coset = json::array();
  for (const Poly& p : t->coset) coset.push_back(show(p));
  if (!t->coset.empty()) b.line("  modulo Ann(F)_{d-k}: " + std::to_string(t->coset.size()) + " basis element(s)");
  b.data["tau"] = show(t->tau);
  b.data["coset"] = coset;
}

void Session::cmd_cs_check(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 3, "cs-check F G tau");
  Poly F = named_or_inline(w[1], Side::Dual, pos), G = named_or_inline(w[2], Side::Dual, pos);
  Poly tau = named_or_inline(w[3], Side::Ring, pos);
  CsCertificate c = check_connected_sum(vars_.grading, F, G, tau);
  if (c.verdict) {
    b.line("connected sum: yes, over T = Q/Ann(" + show(*c.H) + "), k = " + std::to_string(c.k));
  } else if (!c.condition_a) {
    b.line("NOT a connected sum: condition (a) fails (tau o F != tau o G or zero)");
  } else {
    b.line("NOT a connected sum: condition (b) fails at degree " + std::to_string(*c.failing_degree));
    b.line("  dim(Ann(F) + Ann(G)) = " + std::to_string(c.dim_sum_at_failure) + " vs dim Ann(H) = " +
           std::to_string(c.dim_ann_h_at_failure));
  }
  b.line("condition (a): " + yes(c.condition_a) + "  condition (b): " + yes(c.condition_b));
  if (!(c.hilbert_actual == c.hilbert_predicted))
    b.line("Hilbert mismatch: " + paren(c.hilbert_actual) + " vs " + paren(c.hilbert_predicted));
  b.line("H(Q/Ann(F-G)) = " + paren(c.hilbert_actual) + ", H(A)+H(B)-H(T)-H(T)[d-k] = " + paren(c.hilbert_predicted));
  b.data["verdict"] = c.verdict;
  b.data["condition_a"] = c.condition_a;
  b.data["condition_b"] = c.condition_b;
  b.data["failing_degree"] = c.failing_degree ? json(*c.failing_degree) : json(nullptr);
  b.data["hilbert_actual"] = c.hilbert_actual.values();
  b.data["hilbert_predicted"] = c.hilbert_predicted.values();
  b.data["H"] = c.H ? json(show(*c.H)) : json(nullptr);
}

void Session::cmd_cs_build(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 3, "cs-build F G tau");
  Poly F = named_or_inline(w[1], Side::Dual, pos), G = named_or_inline(w[2], Side::Dual, pos);
  Poly tau = named_or_inline(w[3], Side::Ring, pos);
  auto s = std::make_shared<InverseSystem>(connected_sum_dual(vars_.grading, F, G, tau));
  b.line("dual: " + show(s->duals()[0]));
  b.line("hilbert: " + s->hilbert().to_string());
  b.data["dual"] = show(s->duals()[0]);
  b.data["hilbert"] = s->hilbert().values();
  set_current(s, "connected sum");
}

void Session::cmd_fiber_build(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 2, "fiber-build F G");
  Poly F = named_or_inline(w[1], Side::Dual, pos), G = named_or_inline(w[2], Side::Dual, pos);
  auto s = std::make_shared<InverseSystem>(fibered_product_dual(vars_.grading, F, G));
  b.line("duals: " + show(F) + ", " + show(G));
  b.line("hilbert: " + s->hilbert().to_string());
  b.data["duals"] = {show(F), show(G)};
  b.data["hilbert"] = s->hilbert().values();
  set_current(s, "fibered product");
}

void Session::print_presentation(Block& b, const GradedAlgebra& a) {
  DualPresentation p = dual_presentation(a);
  VarNames names = VarNames::defaults(p.grading.nvars());
  std::string decl = "vars";
  for (int i = 0; i < p.grading.nvars(); ++i)
    decl += " " + names.names[i] + ":" + std::to_string(p.grading.weights[i]);
  b.line("presentation: " + decl);
  json duals = json::array();
  for (const Poly& g : p.duals) {
    b.line("  dual: " + to_string(g, p.grading, names));
    duals.push_back(to_string(g, p.grading, names));
  }
  b.data["presentation"] = {{"vars", decl}, {"duals", duals}};
}

void Session::cmd_structural(Block& b, const std::vector<std::string>& w, bool sum) {
  need_args(w, 2, sum ? "cs-structural pA pB" : "fiber-structural pA pB");
  OrientedSurjection pa = surjection(w[1]), pb = surjection(w[2]);
  auto d = std::make_shared<GradedSubquotient>(fibered_product_structural(pa, pb));
  std::shared_ptr<const GradedSubquotient> out = d;
  if (sum) {
    try {
      out = std::make_shared<GradedSubquotient>(connected_sum_structural(*d));
    } catch (const ThomMismatch& m) {
      throw Error("no total Thom class: pi_A(tau_A) = " + show(m.pi_a) + " but pi_B(tau_B) = " + show(m.pi_b));
    }
  }
  b.line("d = " + std::to_string(out->d()) + ", k = " + std::to_string(out->k()));
  b.line("hilbert: " + out->hilbert().to_string());
  b.data["hilbert"] = out->hilbert().values();
  b.data["d"] = out->d();
  b.data["k"] = out->k();
  print_presentation(b, out->algebra());
  set_current(out, sum ? "connected sum" : "fibered product");
}

void Session::print_generic(Block& b, const GenericLefschetz& g, const std::string& key) {
  b.line(key + ": SLP " + yes(g.report.slp) + ", WLP " + yes(g.report.wlp) + ", Jordan type " +
         to_string(g.jordan.partition) + " (observed-generic)");
  b.data[key] = {{"slp", g.report.slp},
                 {"wlp", g.report.wlp},
                 {"jordan_type", g.jordan.partition},
                 {"witness", vec_json(g.report.ell)}};
}

void Session::cmd_blowup(Block& b, const std::vector<std::string>& w) {
  need_args(w, 1, "blowup pA");
  auto pa = std::make_shared<OrientedSurjection>(surjection(w[1]));
  BlowupResult r = blowup_cs(pa, opt_.trials, opt_.seed);
  b.line("H(B) = " + paren(r.b->hilbert()) + ", H(A x_T B) = " + paren(r.fiber.hilbert()) + ", H(A #_T B) = " +
         paren(r.sum.hilbert()));
  b.data["hilbert_b"] = r.b->hilbert().values();
  b.data["hilbert_fiber"] = r.fiber.hilbert().values();
  b.data["hilbert_sum"] = r.sum.hilbert().values();
  print_generic(b, r.fiber_lefschetz, "fiber");
  print_generic(b, r.sum_lefschetz, "sum");
  b.line("seed: " + std::to_string(opt_.seed) + " trials: " + std::to_string(opt_.trials));
  b.data["seed"] = opt_.seed;
  b.data["trials"] = opt_.trials;
  set_current(std::make_shared<GradedSubquotient>(r.sum), "blowup connected sum");
}

void Session::cmd_monomial_cs(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 2, "monomial-cs F G");
  auto mono = [&](const std::string& a) {
    Poly p = named_or_inline(a, Side::Dual, pos);
    if (p.terms().size() != 1) throw Error("'" + a + "' is not a monomial");
    return p.terms().begin()->first;
  };
  auto s = monomial_cs_criterion(vars_.grading, mono(w[1]), mono(w[2]), field_);
  auto show_m = [&](const Monomial& m) { return to_string(m, vars_.names, Side::Dual); };
  if (!s) {
    b.line("no split: F - G is not a connected sum over any T in these coordinates");
    b.data["split"] = nullptr;
    return;
  }
  b.line("M0 = " + show_m(s->m0) + ", M_F = " + show_m(s->mf) + ", M_G = " + show_m(s->mg));
  b.line("tau = " + show(s->tau));
  b.data["split"] = {{"m0", show_m(s->m0)}, {"mf", show_m(s->mf)}, {"mg", show_m(s->mg)}, {"tau", show(s->tau)}};
}

void Session::cmd_probe(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 1, "probe F");
  ProbeReport r = probe_decomposability(vars_.grading, named_or_inline(w[1], Side::Dual, pos));
  std::string degs, cands;
  for (int d : r.generator_degrees) degs += " " + std::to_string(d);
  for (int k : r.candidates) cands += " " + std::to_string(k);
  b.line("generator degrees:" + degs);
  b.line("candidate k:" + (cands.empty() ? std::string(" none") : cands));
  b.line("totally indecomposable: " + yes(r.totally_indecomposable));
  if (r.binomial_attempted)
    b.line(r.binomial ? "binomial split: F = " + show(r.binomial->F) + ", G = " + show(r.binomial->G) +
                            ", tau = " + show(r.binomial->tau)
                      : std::string("binomial split: none in these coordinates"));
  if (!r.note.empty()) b.line("note: " + r.note);
  b.data["generator_degrees"] = r.generator_degrees;
  b.data["candidates"] = r.candidates;
  b.data["k0_ruled_out"] = r.k0_ruled_out;
  b.data["totally_indecomposable"] = r.totally_indecomposable;
  b.data["binomial_attempted"] = r.binomial_attempted;
  b.data["binomial"] = r.binomial ? json{{"F", show(r.binomial->F)}, {"G", show(r.binomial->G)},
                                         {"tau", show(r.binomial->tau)}, {"k", r.binomial->k}}
                                  : json(nullptr);
  b.data["note"] = r.note;
}

void Session::cmd_diag(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  need_args(w, 1, "diag-quadratic F");
  QuadraticDiagonal q = diagonalize_quadratic(vars_.grading, named_or_inline(w[1], Side::Dual, pos));
  VarNames z = VarNames::defaults(vars_.nvars());
  b.line("diagonal form: " + to_string(q.form, vars_.grading, z));
  b.line("blocks: " + std::to_string(q.blocks));
  b.data["form"] = to_string(q.form, vars_.grading, z);
  b.data["diagonal"] = vec_json(q.diagonal);
  b.data["blocks"] = q.blocks;
}

void Session::cmd_lefschetz(Block& b, const std::vector<std::string>& w, SourcePos pos, const std::string& which) {
  Current c = target(w, pos);
  GradedAlgebra a = c.algebra();
  auto show_form = [&](const Vec& l) {
    return c.sys && !l.empty() ? to_string(c.sys->lift(1, l), c.vars.grading, c.vars.names) : vec_string(l);
  };
  LefschetzReport rep;
  std::optional<JordanType> jt;
  bool sampled = false;
  if (opt_.ell && !opt_.generic) {
    Vec l = explicit_form(c);
    rep = slp_check(a, l);
    if (a.dim(1) > 0 || which != "jordan") jt = jordan_type(a, l);
  } else if (a.dim(1) == 0) {
    if (which == "jordan") throw Error("no linear forms: A_1 = 0, Jordan type undefined");
    rep = slp_check(a, Vec{});
  } else {
    GenericLefschetz g = c.sys ? generic_lefschetz(*c.sys, opt_.trials, opt_.seed)
                               : generic_lefschetz(a, opt_.trials, opt_.seed);
    rep = g.report;
    jt = g.jordan;
    sampled = true;
  }
  if (which == "wlp") {
    std::string fail = rep.wlp_failure ? " (x l not of maximal rank on A_" + std::to_string(rep.wlp_failure->first) + ")" : "";
    b.line("WLP=" + yes(rep.wlp) + fail);
    b.data["wlp"] = rep.wlp;
  } else if (which == "slp") {
    std::string fail = rep.slp_failure ? " (x l^" + std::to_string(rep.slp_failure->second) + " not of maximal rank on A_" +
                                             std::to_string(rep.slp_failure->first) + ")"
                                       : "";
    b.line("SLP=" + yes(rep.slp) + fail);
    if (rep.narrow_sense_slp) b.line("narrow-sense SLP=" + yes(*rep.narrow_sense_slp));
    b.data["slp"] = rep.slp;
    b.data["narrow_sense_slp"] = rep.narrow_sense_slp ? json(*rep.narrow_sense_slp) : json(nullptr);
  } else {
    b.line("Jordan type: " + to_string(jt->partition) + (sampled ? " (observed-generic)" : ""));
    b.line("conjugate of sorted Hilbert function: " + yes(jt->conjugate_of_hilbert));
    b.data["jordan_type"] = jt->partition;
    b.data["conjugate_of_hilbert"] = jt->conjugate_of_hilbert;
    b.data["observed_generic"] = sampled;
  }
  if (rep.wlp_failure) b.data["wlp_failure"] = {rep.wlp_failure->first, rep.wlp_failure->second};
  if (rep.slp_failure) b.data["slp_failure"] = {rep.slp_failure->first, rep.slp_failure->second};
  b.line("form: " + show_form(rep.ell));
  b.data["form"] = show_form(rep.ell);
  if (rep.no_linear_forms) b.line("note: no linear forms (A_1 = 0); verdicts use l = 0");
  b.data["no_linear_forms"] = rep.no_linear_forms;
  b.data["char_sensitive"] = rep.char_sensitive;
  for (const auto& warn : rep.warnings)
    if (warn.rfind("no linear forms", 0) != 0) b.line("warning: " + warn);
  if (sampled) {
    b.line("seed: " + std::to_string(opt_.seed) + " trials: " + std::to_string(opt_.trials));
    b.data["seed"] = opt_.seed;
    b.data["trials"] = opt_.trials;
  }
}

void Session::cmd_wlp_middle(Block& b, const std::vector<std::string>& w) {
  need_args(w, 2, "wlp-middle pA pB");
  OrientedSurjection pa = surjection(w[1]), pb = surjection(w[2]);
  auto fp = std::make_shared<GradedSubquotient>(fibered_product_structural(pa, pb));
  auto cs = std::make_shared<GradedSubquotient>(connected_sum_structural(*fp));
  for (auto [name, D] : {std::pair{"fiber", fp}, std::pair{"sum", cs}}) {
    Vec l;
    if (opt_.ell && !opt_.generic) {
      Current c{nullptr, vars_, D, name};
      l = explicit_form(c);
    } else {
      l = generic_lefschetz(D->algebra(), opt_.trials, opt_.seed).report.ell;
    }
    MiddleCheck m = wlp_middle_check(*D, l);
    b.line(std::string(name) + ": u = " + std::to_string(m.u) + ", v = " + std::to_string(m.v) +
           ", middle check " + yes(m.result) + ", full WLP " + yes(m.full_wlp));
    b.data[name] = {{"u", m.u}, {"v", m.v}, {"middle", m.result}, {"full_wlp", m.full_wlp}, {"form", vec_json(l)}};
  }
  if (!(opt_.ell && !opt_.generic)) {
    b.line("seed: " + std::to_string(opt_.seed) + " trials: " + std::to_string(opt_.trials));
    b.data["seed"] = opt_.seed;
  }
  set_current(cs, "connected sum");
}

void Session::cmd_family(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  if (w.size() < 2) throw Error("usage: family h3 a d k | family nonslp m t | family closure k [F]");
  const std::string& kind = w[1];
  b.data["family"] = kind;
  if (kind == "h3") {
    need_args(w, 4, "family h3 a d k");
    int a = to_int(w[2], "a"), d = to_int(w[3], "d"), k = to_int(w[4], "k");
    if (!have_vars_) set_vars(make_vars({"s", "x", "y"}));
    else if (vars_.nvars() != 3 || !vars_.grading.is_standard()) throw Error("family h3 needs vars s x y");
    HeightThree h = heightthree_family(a, d, k, field_);
    auto s = std::make_shared<InverseSystem>(h.c);
    b.line("dual: " + show(s->duals()[0]));
    b.line("hilbert: " + s->hilbert().to_string());
    b.line("H(A)+H(B)-H(T)-H(T)[d-k]: " + h.predicted.to_string() + " (" +
           (s->hilbert() == h.predicted ? "agrees" : "DISAGREES") + ")");
    b.data["dual"] = show(s->duals()[0]);
    b.data["hilbert"] = s->hilbert().values();
    b.data["predicted"] = h.predicted.values();
    set_current(s, "height three");
  } else if (kind == "nonslp") {
    need_args(w, 3, "family nonslp m t");
    int m = to_int(w[2], "m"), t = to_int(w[3], "t");
    InverseSystem c = nonslp_family(m, t, field_);
    VarTable v = make_vars({"z1", "z2"}, {1, t});
    if (!have_vars_) set_vars(v);
    else if (!(vars_.grading == v.grading)) throw Error("family nonslp needs vars z1:1 z2:" + std::to_string(t));
    auto s = std::make_shared<InverseSystem>(c);
    b.line("dual: " + show(s->duals()[0]));
    b.line("hilbert: " + s->hilbert().to_string());
    b.line("formula: " + nonslp_hilbert(m, t).to_string());
    b.data["dual"] = show(s->duals()[0]);
    b.data["hilbert"] = s->hilbert().values();
    b.data["formula"] = nonslp_hilbert(m, t).values();
    set_current(s, "nonslp");
  } else if (kind == "closure") {
    if (w.size() != 3 && w.size() != 4) throw Error("usage: family closure k [F]");
    int k = to_int(w[2], "k");
    std::shared_ptr<const InverseSystem> a;
    if (w.size() == 4) a = system_of(w, 3, pos);
    else if (current_.sys) a = current_.sys;
    else throw Error("family closure needs a dual generator or a current Q/Ann(F)");
    Poly ell;
    if (opt_.ell && !opt_.generic) {
      ell = parse_poly(*opt_.ell, vars_, field_);
    } else {
      GenericLefschetz g = generic_lefschetz(*a, opt_.trials, opt_.seed);
      if (!g.report.slp) throw Error("no strong Lefschetz form found for A (" + std::to_string(opt_.trials) + " trials)");
      ell = a->lift(1, g.report.ell);
      b.line("seed: " + std::to_string(opt_.seed) + " trials: " + std::to_string(opt_.trials));
      b.data["seed"] = opt_.seed;
    }
    ClosureResult r = closure_add(a, ell, k, std::nullopt, opt_.trials, opt_.seed);
    b.line("l = " + show(ell) + ", lambda = " + vec_string(r.lambda));
    b.line("H(A) = " + paren(a->hilbert()) + ", W = " + paren(closure_increment(k, a->socle_degree())));
    b.line("hilbert: " + r.sum.hilbert().to_string());
    print_generic(b, r.lefschetz, "sum");
    b.data["form"] = show(ell);
    b.data["hilbert"] = r.sum.hilbert().values();
    b.data["predicted"] = r.predicted.values();
    set_current(std::make_shared<GradedSubquotient>(r.sum), "closure");
  } else {
    throw Error("unknown family '" + kind + "' (h3, nonslp, closure)");
  }
}

void Session::cmd_two_block(Block& b, const std::vector<std::string>& w, SourcePos pos) {
  Current c = target(w, pos);
  std::optional<Vec> u;
  if (opt_.ell && !opt_.generic) u = explicit_form(c);
  TwoBlockClass r = two_block_classify(c.algebra(), u, opt_.trials, opt_.seed);
  std::string type = r.type == 0 ? "undecided" : r.type == 1 ? "(1) F[u,v]/(u^a, v^2)" : "(2) F[u,v]/(u^a, v^2 - u^t v)";
  b.line("a = " + std::to_string(r.a) + ", t = " + std::to_string(r.t) + ", type " + type);
  b.line("v^2 = " + r.alpha.to_string() + " u^t v + " + r.beta.to_string() + " u^2t");
  if (r.extension_required) b.line("extension required");
  b.line("SLP " + yes(r.slp) + ", standard graded " + yes(r.standard_graded) + ", t = 1 " + yes(r.t_is_one));
  if (!r.note.empty()) b.line("note: " + r.note);
  b.line("seed: " + std::to_string(opt_.seed) + " trials: " + std::to_string(opt_.trials));
  b.data["a"] = r.a;
  b.data["t"] = r.t;
  b.data["type"] = r.type;
  b.data["extension_required"] = r.extension_required;
  b.data["alpha"] = r.alpha.to_string();
  b.data["beta"] = r.beta.to_string();
  b.data["slp"] = r.slp;
  b.data["standard_graded"] = r.standard_graded;
  b.data["t_is_one"] = r.t_is_one;
  b.data["note"] = r.note;
  b.data["seed"] = opt_.seed;
}

}  // namespace

std::vector<Statement> split_script(std::string_view text) {
  std::vector<Statement> out;
  SourcePos pos;
  std::string cur;
  SourcePos start = pos;
  bool comment = false;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) {
      // Point at the first non-blank character.
      SourcePos p = start;
      std::size_t lead = cur.find_first_not_of(" \t\r\n");
      out.push_back({step_pos(p, std::string_view(cur).substr(0, lead)), t});
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == ';' || c == '\n') {
      flush();
      comment = false;
      pos = step_pos(pos, std::string(1, c));
      start = pos;
      continue;
    }
    if (!comment) cur += c;
    pos = step_pos(pos, std::string(1, c));
  }
  flush();
  return out;
}

Field parse_field(std::string_view spec) {
  if (spec == "rat" || spec == "QQ" || spec == "Q") return Field::rationals();
  if (spec.substr(0, 3) == "fp:") {
    std::string p(spec.substr(3));
    return Field::prime(static_cast<std::uint64_t>(to_int(p, "the prime")));
  }
  throw Error("field must be 'rat' or 'fp:<p>', got '" + std::string(spec) + "'");
}

int run(const Options& opt, std::ostream& out, std::ostream& err) {
  json doc = {{"schema_version", kSchemaVersion}, {"results", json::array()}, {"error", nullptr}};
  int status = 0;
  try {
    Session s(opt);
    for (const Statement& st : split_script(opt.script)) {
      try {
        auto b = s.execute(st);
        if (!b) continue;
        b->data["statement"] = b->statement;
        if (opt.json) {
          doc["results"].push_back(b->data);
        } else {
          out << "> " << b->statement << "\n";
          for (const auto& l : b->lines) out << l << "\n";
          out.flush();
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(st.pos, e.what());
      }
    }
  } catch (const ParseError& e) {
    status = 1;
    doc["error"] = {{"message", e.what()}, {"line", e.pos.line}, {"col", e.pos.col}};
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    status = 1;
    doc["error"] = {{"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  if (opt.json) out << doc.dump(2) << "\n";
  return status;
}

}  // namespace agsum::cli
