// Command-line front end for the tamehall library.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tamehall/error.hpp"
#include "tamehall/functors.hpp"
#include "tamehall/gr.hpp"
#include "tamehall/hall.hpp"
#include "tamehall/homreg.hpp"
#include "tamehall/parallel.hpp"

using namespace tamehall;
using nlohmann::json;

namespace {

struct Options {
  std::string preset;
  std::string file;
  int sink = 0;  // 1-based, 0 = keep
  int field = 3;
  bool json = false;
  int threads = 0;
  bool quiet = false;

  std::string module;  // module spec
  std::string kind;    // build kind
  std::string dims;
  std::string label;
  int vertex = 0;
  std::string bound;
  std::string m, n1, n2;
  std::string root;
  int max_defect = 6;
  int nq = 0, nl = 0;
};

bool use_color() {
  const char* nc = std::getenv("NO_COLOR");
  return !(nc && *nc) && isatty(STDOUT_FILENO);
}

std::string paint(const std::string& s, bool good) {
  if (!use_color()) return s;
  return std::string(good ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DimVector parse_dims(std::string text, int n) {
  for (char& c : text)
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') c = ',';
  std::vector<int> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const int x = std::stoi(tok, &used);
      if (used != tok.size() || x < 0) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::exception&) {
      throw InvalidInput("bad dimension vector entry '" + tok + "'");
    }
  }
  if (static_cast<int>(v.size()) != n)
    throw InvalidInput("dimension vector needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return DimVector(v);
}

json dims_json(const DimVector& d) { return d.values(); }

QuiverPtr load_quiver(const Options& o) {
  if (o.preset.empty() == o.file.empty()) throw InvalidInput("give exactly one of --preset and --file");
  Quiver q = o.preset.empty() ? parse_quiver(read_file(o.file)) : preset_quiver(o.preset);
  if (o.sink) {
    if (o.sink < 1 || o.sink > q.vertex_count()) throw InvalidInput("--sink out of range");
    std::string label = q.label();
    Quiver r = orient_toward(q, o.sink - 1);
    q = Quiver(r.vertex_count(), r.arrows(), label);
  }
  return std::make_shared<const Quiver>(std::move(q));
}

int check_vertex(const Quiver& q, int v) {
  if (v < 1 || v > q.vertex_count()) throw InvalidInput("--vertex must lie in 1.." + std::to_string(q.vertex_count()));
  return v - 1;
}

/// "1,0,1" indecomposable of that root, "homog" or "homog:<label>" a simple
/// homogeneous module, "@path" a representation file.
Rep parse_module(const std::string& spec, QuiverPtr q, const Field& f) {
  if (spec.empty()) throw InvalidInput("missing module specification");
  if (spec[0] == '@') return rep_from_json(read_file(spec.substr(1)), q);
  if (spec.rfind("homog", 0) == 0) {
    const HomogeneousSimples hs = build_homogeneous_simples(q, f);
    if (hs.modules.empty()) throw InvalidInput("no simple homogeneous modules over this field");
    if (spec == "homog") return hs.modules.front().module;
    const std::string label = spec.substr(spec.find(':') + 1);
    for (const auto& m : hs.modules)
      if (m.label == label) return m.module;
    throw InvalidInput("no simple homogeneous module labelled " + label);
  }
  return build_indecomposable(q, f, parse_dims(spec, q->vertex_count()));
}

json rep_json(const Rep& m) { return json::parse(rep_to_json(m)); }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    json out = j;
    out["schema"] = 1;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

Progress progress_for(const Options& o) {
  if (o.quiet) return {};
  return [](const std::string& line) { std::cerr << line << std::endl; };
}

std::string kind_name(const Quiver& q, const DimVector& x) {
  const GraphClass cls = classify_graph(q);
  if (!cls.affine()) return "dynkin";
  const int d = defect(q, x);
  return d < 0 ? "preprojective" : d > 0 ? "preinjective" : "regular";
}

// --------------------------------------------------------------------------

int cmd_quiver_info(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const GraphClass cls = classify_graph(*q);
  json j;
  std::ostringstream t;
  j["class"] = cls.name();
  j["vertices"] = q->vertex_count();
  json arrows = json::array();
  for (const auto& a : q->arrows()) arrows.push_back({a.source + 1, a.target + 1});
  j["arrows"] = arrows;
  std::vector<int> sinks;
  for (int s : q->sinks()) sinks.push_back(s + 1);
  j["sinks"] = sinks;
  t << "class     " << cls.name() << "\n";
  t << "vertices  " << q->vertex_count() << "\n";
  t << "arrows   ";
  for (const auto& a : q->arrows()) t << " " << a.source + 1 << "->" << a.target + 1;
  t << "\nsinks    ";
  for (int s : sinks) t << " " << s;
  t << "\n";
  if (cls.affine()) {
    const DimVector delta = radical_delta(*q);
    j["delta"] = dims_json(delta);
    std::vector<int> defects;
    for (int v = 0; v < q->vertex_count(); ++v) defects.push_back(defect(*q, DimVector::unit(q->vertex_count(), v)));
    j["simple_defects"] = defects;
    t << "delta     " << delta << "\n";
    t << "defect S(i)";
    for (int d : defects) t << " " << d;
    t << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_roots(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const GraphClass cls = classify_graph(*q);
  DimVector bound;
  if (!o.bound.empty()) bound = parse_dims(o.bound, q->vertex_count());
  else if (cls.affine()) bound = radical_delta(*q);
  else bound = DimVector(std::vector<int>(q->vertex_count(), 3));
  json arr = json::array();
  std::ostringstream t;
  for (const auto& r : positive_real_roots(*q, bound)) {
    json x{{"root", dims_json(r.root)}, {"class", kind_name(*q, r.root)}};
    t << r.root;
    if (r.defect) {
      x["defect"] = *r.defect;
      t << "  defect " << *r.defect;
    }
    t << "  " << kind_name(*q, r.root) << "\n";
    arr.push_back(std::move(x));
  }
  emit(o, json{{"bound", dims_json(bound)}, {"roots", arr}}, t.str());
  return 0;
}

int cmd_build(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const Field& f = Field::get(o.field);
  std::vector<std::pair<std::string, Rep>> out;
  if (o.kind == "simple") out.emplace_back("", simple(q, f, check_vertex(*q, o.vertex)));
  else if (o.kind == "proj") out.emplace_back("", projective(q, f, check_vertex(*q, o.vertex)));
  else if (o.kind == "inj") out.emplace_back("", injective(q, f, check_vertex(*q, o.vertex)));
  else if (o.kind == "prep") out.emplace_back("", build_preprojective(q, f, parse_dims(o.dims, q->vertex_count())));
  else if (o.kind == "prei") out.emplace_back("", build_preinjective(q, f, parse_dims(o.dims, q->vertex_count())));
  else if (o.kind == "homog") {
    const HomogeneousSimples hs = build_homogeneous_simples(q, f);
    for (const auto& m : hs.modules)
      if (o.label.empty() || m.label == o.label) out.emplace_back(m.label, m.module);
    if (out.empty()) throw InvalidInput("no simple homogeneous module matches");
  } else {
    throw InvalidInput("unknown build kind " + o.kind);
  }
  json arr = json::array();
  std::ostringstream t;
  for (const auto& [label, m] : out) {
    json x = rep_json(m);
    if (!label.empty()) x["label"] = label;
    arr.push_back(x);
    if (!label.empty()) t << "# " << label << "\n";
    t << rep_to_json(m) << "\n";
  }
  emit(o, json{{"modules", arr}}, t.str());
  return 0;
}

int cmd_reflect(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const Field& f = Field::get(o.field);
  const int v = check_vertex(*q, o.vertex);
  const Rep m = parse_module(o.module, q, f);
  Rep r = q->is_sink(v) ? reflect_plus(m, v) : q->is_source(v) ? reflect_minus(m, v)
                                                                 : throw InvalidInput("vertex is neither a sink nor a source");
  json j{{"direction", q->is_sink(v) ? "plus" : "minus"}, {"quiver", format_quiver(r.quiver())}, {"module", rep_json(r)}};
  std::ostringstream t;
  t << (q->is_sink(v) ? "S+" : "S-") << o.vertex << ": " << m.dims() << " -> " << r.dims() << "\n"
    << format_quiver(r.quiver()) << rep_to_json(r) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_tau(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const Field& f = Field::get(o.field);
  const Rep m = parse_module(o.module, q, f);
  const Rep r = tau(m);
  const DimVector phi = coxeter_matrix(*q).apply(m.dims());
  json j{{"dims", dims_json(m.dims())}, {"tau_dims", dims_json(r.dims())}, {"coxeter_image", dims_json(phi)},
         {"iso_to_input", r.dims() == m.dims() && iso(r, m)}, {"module", rep_json(r)}};
  std::ostringstream t;
  t << "dim M      " << m.dims() << "\ndim tau M  " << r.dims() << "\nPhi dim M  " << phi << "\n";
  if (r.dims() == m.dims()) t << "tau M ~ M  " << (iso(r, m) ? "yes" : "no") << "\n";
  t << rep_to_json(r) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_hall_number(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const Field& f = Field::get(o.field);
  const Rep m = parse_module(o.m, q, f), n1 = parse_module(o.n1, q, f), n2 = parse_module(o.n2, q, f);
  const std::uint64_t h = hall_number(m, n1, n2);
  emit(o, json{{"m", dims_json(m.dims())}, {"n1", dims_json(n1.dims())}, {"n2", dims_json(n2.dims())}, {"q", o.field}, {"hall_number", h}},
       std::to_string(h) + "\n");
  return 0;
}

std::string verdict_text(const HallPolynomial& f, int m) {
  std::ostringstream t;
  t << "f_" << m << "(q) = " << f.str() << "\n  samples:";
  for (const auto& [q, c] : f.samples) t << " " << q << ":" << c;
  t << "\n  verified:";
  for (const auto& [q, c] : f.verified) t << " " << q << ":" << c;
  const auto s = gr_form_check(f.coeffs, m);
  t << "\n  (q^m - q^s)/(q - 1) form: " << (s ? "s=" + std::to_string(*s) : "none") << "\n";
  return t.str();
}

int cmd_hall_poly(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const DimVector x = parse_dims(o.root, q->vertex_count());
  const int m = -defect(*q, x);
  const HallPolynomial f = hall_poly_for_root(q, x, progress_for(o));
  json j = json::parse(polynomial_json(f, m));
  j["root"] = dims_json(x);
  emit(o, j, verdict_text(f, m));
  return 0;
}

int cmd_hall_table(const Options& o) {
  std::vector<std::string> presets;
  if (!o.preset.empty() || !o.file.empty()) presets.push_back("");
  else presets = {"dtilde:4", "e6tilde", "e7tilde", "e8tilde"};
  const auto& golden = golden_f_table();
  std::map<int, HallPolynomial> rows;
  std::map<int, std::string> source;
  bool all_ok = true;
  for (const auto& name : presets) {
    Options oo = o;
    if (!name.empty()) oo.preset = name;
    const QuiverPtr q = load_quiver(oo);
    const DimVector delta = radical_delta(*q);
    for (int m = 1; m <= std::min(o.max_defect, 6); ++m) {
      if (rows.count(m)) continue;
      int i = -1;
      for (int v = 0; v < q->vertex_count() && i < 0; ++v)
        if (delta[v] == m) i = v;
      if (i < 0) continue;
      QuiverPtr qi = q;
      if (q->sinks() != std::vector<int>{i}) qi = std::make_shared<const Quiver>(orient_toward(*q, i));
      if (!o.quiet) std::cerr << "f_" << m << " on " << classify_graph(*q).name() << " at vertex " << i + 1 << std::endl;
      rows.emplace(m, hall_poly_f(qi, i, progress_for(o)));
      source[m] = classify_graph(*q).name();
    }
  }
  json arr = json::array();
  std::ostringstream t;
  for (const auto& [m, f] : rows) {
    const bool ok = f.coeffs == golden[m - 1];
    all_ok = all_ok && ok;
    json j = json::parse(polynomial_json(f, m));
    j["quiver"] = source[m];
    j["matches_reference"] = ok;
    arr.push_back(j);
    t << verdict_text(f, m) << "  from " << source[m] << ": " << paint(ok ? "matches reference" : "MISMATCH", ok) << "\n";
  }
  emit(o, json{{"rows", arr}, {"ok", all_ok}}, t.str());
  if (!all_ok) {
    std::cerr << "hall-table: computed polynomials differ from the reference table\n";
    return 4;
  }
  return 0;
}

int cmd_gr_measure(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const Field& f = Field::get(o.field);
  const Rep m = parse_module(o.module, q, f);
  const GRMeasure mu = gr_measure(m);
  json j{{"dims", dims_json(m.dims())}, {"measure", mu.elements}};
  std::ostringstream t;
  t << "mu" << m.dims() << " = " << mu.str() << "\n";
  if (is_brick(m)) {
    json subs = json::array();
    t << "GR submodules:";
    for (const auto& d : gr_submodule_dims(m)) {
      json s{{"dims", dims_json(d)}};
      t << " " << d;
      if (classify_graph(*q).affine()) s["defect"] = defect(*q, d);
      subs.push_back(s);
    }
    t << "\n";
    j["gr_submodules"] = subs;
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_gr_check(const Options& o) {
  const QuiverPtr q = load_quiver(o);
  const GRReport r = verify_main_theorem(q, Field::get(o.field));
  if (o.json) {
    std::cout << gr_report_json(r) << "\n";
  } else {
    std::cout << r.quiver << " over GF(" << r.q << ")\n";
    for (const auto& c : r.checks) {
      std::cout << "R[" << c.label << "] mu=" << c.measure.str() << "  P=" << c.sub_dims << " defect " << c.sub_defect
                << "  R/P=" << c.quotient_dims << " defect " << c.quotient_defect << (c.quotient_brick ? " brick" : " decomposable")
                << "\n  hom(R/P,P)=" << c.pair.hom_qp << " hom(P,R/P)=" << c.pair.hom_pq << " ext(P,R/P)=" << c.pair.ext_pq
                << " ext(R/P,P)=" << c.pair.ext_qp << "  u=" << c.count.u << " formula=" << c.count.formula << "  "
                << paint(c.ok ? "ok" : "FAILED", c.ok) << "\n";
    }
    std::cout << "measure constant across R: " << (r.measure_constant ? "yes" : "no") << "\n"
              << paint(r.ok ? "PASS" : "FAIL", r.ok) << "\n";
  }
  return r.ok ? 0 : 4;
}

int cmd_necklace(const Options& o) {
  if (!is_prime_power(o.nq)) throw InvalidInput("--q must be a prime power");
  if (o.nl < 1) throw InvalidInput("--l must be positive");
  const std::uint64_t n = necklace_count(o.nq, o.nl);
  emit(o, json{{"q", o.nq}, {"l", o.nl}, {"count", n}}, std::to_string(n) + "\n");
  return 0;
}

// Brute-force Hall numbers on A2 and A3: subspace tuples closed under the maps.
std::uint64_t naive_hall(const Rep& m, const Rep& n1, const Rep& n2) {
  const Quiver& q = m.quiver();
  const int n = q.vertex_count();
  if (n2.dims() + n1.dims() != m.dims()) return 0;
  std::uint64_t count = 0;
  std::vector<Mat> bases(n);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (int a = 0; a < q.arrow_count(); ++a) {
        const auto [s, t] = q.arrows()[a];
        const Mat img = bases[s] * m.map(a).transpose();
        if (rank(Mat::vstack(bases[t], img)) != bases[t].rows()) return;
      }
      const SubrepWitness w = subrep(m, bases);
      if (iso(w.sub, n2) && iso(w.quotient, n1)) ++count;
      return;
    }
    for_each_subspace(m.field(), m.dim(v), n2.dim(v), [&](const Mat& b) {
      bases[v] = b;
      rec(v + 1);
      return true;
    });
  };
  rec(0);
  return count;
}

int cmd_oracle_dynkin(const Options& o) {
  json arr = json::array();
  std::ostringstream t;
  bool all_ok = true;
  for (const char* name : {"a:2", "a:3"}) {
    const QuiverPtr q = std::make_shared<const Quiver>(preset_quiver(name));
    for (int fq : {2, 3}) {
      const Field& f = Field::get(fq);
      std::vector<Rep> indec;
      for (const auto& r : positive_real_roots(*q, DimVector(std::vector<int>(q->vertex_count(), 1))))
        indec.push_back(build_indecomposable(q, f, r.root));
      std::vector<Rep> pool = indec;
      for (std::size_t a = 0; a < indec.size(); ++a)
        for (std::size_t b = a; b < indec.size(); ++b) pool.push_back(direct_sum(indec[a], indec[b]));
      int triples = 0, mismatches = 0;
      for (const Rep& m : pool)
        for (const Rep& n1 : pool)
          for (const Rep& n2 : pool) {
            if (n1.dims() + n2.dims() != m.dims()) continue;
            ++triples;
            const std::uint64_t a = hall_number(m, n1, n2);
            const std::uint64_t b = naive_hall(m, n1, n2);
            const std::uint64_t c = hall_number_riedtmann(m, n1, n2);
            if (a != b || a != c) {
              ++mismatches;
              std::cerr << name << " q=" << fq << " M=" << m.dims() << " N1=" << n1.dims() << " N2=" << n2.dims() << ": " << a
                        << " vs " << b << " vs " << c << "\n";
            }
          }
      all_ok = all_ok && mismatches == 0;
      arr.push_back({{"quiver", name}, {"q", fq}, {"triples", triples}, {"mismatches", mismatches}});
      t << name << " GF(" << fq << "): " << triples << " triples, " << paint(std::to_string(mismatches) + " mismatches", mismatches == 0)
        << "\n";
    }
  }
  emit(o, json{{"suites", arr}, {"ok", all_ok}}, t.str());
  return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall polynomials, reflection functors and Gabriel-Roiter measures for tame quivers"};
  app.set_config("--config", "", "INI/TOML file with the same keys as the flags");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool field) {
    c->add_option("--preset", o.preset, "kronecker, dtilde:<n>, e6tilde, e7tilde, e8tilde, a:<n>, d:<n>, e:<6|7|8>");
    c->add_option("--file", o.file, "quiver file");
    c->add_option("--sink", o.sink, "reorient the tree toward this vertex (1-based)");
    if (field) c->add_option("--field", o.field, "field size q");
  };
  const std::string module_help = "dims like 1,0,0,0,1 | homog[:label] | @rep.json";

  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> h) {
    handlers[name] = std::move(h);
    return app.add_subcommand(name, help);
  };

  common(sub("quiver-info", "graph class, delta and defects", cmd_quiver_info), false);
  auto* roots = sub("roots", "positive real roots below a bound", cmd_roots);
  common(roots, false);
  roots->add_option("--bound", o.bound, "dimension vector bound (default delta)");

  auto* build = sub("build", "construct a representation", cmd_build);
  common(build, true);
  build->add_option("kind", o.kind, "simple | proj | inj | prep | prei | homog")->required()->check(
      CLI::IsMember({"simple", "proj", "inj", "prep", "prei", "homog"}));
  build->add_option("--vertex", o.vertex, "vertex for simple/proj/inj (1-based)");
  build->add_option("--dims", o.dims, "root for prep/prei");
  build->add_option("--label", o.label, "homogeneous label (field element or inf)");

  auto* reflect = sub("reflect", "BGP reflection at a sink or source", cmd_reflect);
  common(reflect, true);
  reflect->add_option("--vertex", o.vertex)->required();
  reflect->add_option("--module", o.module, module_help)->required();

  auto* tau_c = sub("tau", "Auslander-Reiten translate", cmd_tau);
  common(tau_c, true);
  tau_c->add_option("--module", o.module, module_help)->required();

  auto* hn = sub("hall-number", "number of submodules U of M with U ~ N2 and M/U ~ N1", cmd_hall_number);
  common(hn, true);
  hn->add_option("--m", o.m, module_help)->required();
  hn->add_option("--n1", o.n1, "quotient; " + module_help)->required();
  hn->add_option("--n2", o.n2, "submodule; " + module_help)->required();

  auto* hp = sub("hall-poly", "Hall polynomial for a homogeneous module over a preprojective root", cmd_hall_poly);
  common(hp, false);
  hp->add_option("--root", o.root, "preprojective root x with delta - x preinjective")->required();

  auto* ht = sub("hall-table", "f_1..f_6 checked against the reference table", cmd_hall_table);
  common(ht, false);
  ht->add_option("--max-defect", o.max_defect, "largest m computed")->check(CLI::Range(1, 6));

  auto* gm = sub("gr-measure", "Gabriel-Roiter measure and GR submodules", cmd_gr_measure);
  common(gm, true);
  gm->add_option("--module", o.module, module_help)->required();

  common(sub("gr-check", "GR submodules of homogeneous modules: defect and Kronecker pair", cmd_gr_check), true);

  auto* nk = sub("necklace", "monic irreducible polynomials of degree l over GF(q)", cmd_necklace);
  nk->add_option("--q", o.nq)->required();
  nk->add_option("--l", o.nl)->required();

  sub("oracle-dynkin", "brute-force Hall numbers on A2 and A3", cmd_oracle_dynkin);

  for (auto* s : app.get_subcommands([](CLI::App*) { return true; })) {
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--threads", o.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    s->add_flag("--quiet", o.quiet, "no progress on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (o.threads) set_thread_count(o.threads);
    for (auto* s : app.get_subcommands()) return handlers.at(s->get_name())(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
