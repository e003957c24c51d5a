#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mds/presentations.hpp"
#include "mds/rank2.hpp"
#include "mds/render.hpp"

namespace mds::cli {

namespace {

using json = nlohmann::ordered_json;
using engine::IndexSet;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered key/value report, printed as text or JSON.
class Report {
 public:
  void set(const std::string& key, json value) { data_[key] = std::move(value); }

  std::string text() const {
    std::ostringstream out;
    for (const auto& [key, value] : data_.items()) {
      if (!value.is_array()) {
        out << key << ": " << scalar(value) << "\n";
        continue;
      }
      out << key << ":" << (value.empty() ? " []" : "") << "\n";
      for (const auto& item : value) {
        if (!item.is_object()) {
          out << "  - " << scalar(item) << "\n";
          continue;
        }
        out << "  -";
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          out << (first ? " " : ", ") << k << ": " << scalar(v);
          first = false;
        }
        out << "\n";
      }
    }
    return out.str();
  }

  std::string json_text() const { return data_.dump(2) + "\n"; }
  bool empty() const { return data_.empty(); }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " ~ ") + scalar(x);
      return s;
    }
    return v.dump();
  }

  json data_ = json::object();
};

IntVector parse_class(const std::string& s) {
  IntVector v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      long x = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      v.push_back(Int(x));
    } catch (const std::exception&) {
      throw UsageError("malformed class vector '" + s + "': expected comma-separated integers");
    }
  }
  if (v.empty()) throw UsageError("empty class vector");
  return v;
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<IntVector> rows;
  std::stringstream in(s);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_class(row));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw UsageError("matrix rows differ in length");
  return IntMatrix(rows);
}

// 1-based index lists separated by ';', e.g. "1,2,7;3,4".
std::vector<IndexSet> parse_faces(const std::string& s, std::size_t r) {
  std::vector<IndexSet> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ';')) {
    IndexSet f;
    if (!part.empty())
      for (const auto& x : parse_class(part)) {
        if (x < 1 || x > long(r)) throw UsageError("face index out of range: " + x.get_str());
        f.push_back(x.get_ui() - 1);
      }
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

// A path to a .cox file, the same path without extension, or a corpus id
// (optionally prefixed by a directory such as corpus/).
cox::CoxPresentation load(const std::string& input) {
  namespace fs = std::filesystem;
  for (const auto& candidate : {input, input + ".cox"})
    if (fs::is_regular_file(candidate)) return cox::parse_file(candidate);
  auto id = fs::path(input).stem().string();
  if (auto e = presentations::corpus_entry(id)) return e->presentation;
  throw UsageError("no such input file or corpus entry: " + input);
}

engine::FFaceOptions face_options() {
  engine::FFaceOptions o;
  o.groebner = poly::default_groebner_options();
  return o;
}

std::size_t ample_index(const engine::Analysis& a, const IntVector& w) {
  auto i = a.chamber_containing(w);
  if (!i) throw PreconditionError("ample class " + to_string(w) + " is not interior to a maximal GIT chamber");
  return *i;
}

json cone_list(const std::vector<geom::Cone>& cones) {
  json arr = json::array();
  for (const auto& c : cones) arr.push_back(geom::to_string(c));
  return arr;
}

json face_list(const std::vector<IndexSet>& faces, const cox::CoxPresentation& p) {
  json arr = json::array();
  for (const auto& f : faces) arr.push_back(engine::to_string(f, p));
  return arr;
}

json partition_json(const engine::Analysis& a, const std::vector<IndexSet>& partition) {
  json arr = json::array();
  for (const auto& cls : partition) {
    json c = json::array();
    for (auto i : cls) c.push_back(geom::to_string(a.fan.chambers[i]));
    arr.push_back(c);
  }
  return arr;
}

bool same_partition(std::vector<IndexSet> a, std::vector<IndexSet> b) {
  for (auto& c : a) std::sort(c.begin(), c.end());
  for (auto& c : b) std::sort(c.begin(), c.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mori chamber and stable base locus decompositions of Mori dream spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as JSON");

  std::string input, cls, ample, w1, w2, faces, output;
  bool widen = false;
  Report report;
  std::function<void()> action;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Presentation file or corpus id")->required();
    return sub;
  };

  auto* ffaces = with_input(app.add_subcommand("ffaces", "List the F-faces"));
  ffaces->add_option("--faces", faces, "Candidate faces, 1-based, e.g. 1,2,7;3,4");
  ffaces->callback([&] {
    action = [&] {
      auto p = load(input);
      std::optional<std::vector<IndexSet>> cand;
      if (!faces.empty()) cand = parse_faces(faces, p.num_vars());
      auto ff = engine::enumerate_ffaces(p, face_options(), cand);
      std::vector<IndexSet> sets;
      for (const auto& f : ff) sets.push_back(f.indices);
      report.set("input", p.label);
      if (cand) {
        json tested = json::array();
        for (const auto& c : *cand) {
          bool is = std::find(sets.begin(), sets.end(), c) != sets.end();
          tested.push_back(json{{"face", engine::to_string(c, p)}, {"fface", is}});
        }
        report.set("tested", tested);
      }
      report.set("ffaces", sets.size());
      report.set("faces", face_list(sets, p));
    };
  });

  auto* orbit = with_input(app.add_subcommand("orbit-cones", "List the orbit cones"));
  orbit->callback([&] {
    action = [&] {
      auto p = load(input);
      auto omega = engine::orbit_cones(p, engine::enumerate_ffaces(p, face_options()));
      report.set("input", p.label);
      report.set("orbit_cones", omega.size());
      report.set("cones", cone_list(omega.cones));
    };
  });

  auto* eff = with_input(app.add_subcommand("eff", "Effective cone"));
  eff->callback([&] {
    action = [&] {
      auto p = load(input);
      report.set("input", p.label);
      report.set("eff", geom::to_string(engine::effective_cone(p)));
    };
  });

  auto* mov = with_input(app.add_subcommand("mov", "Moving cone"));
  mov->callback([&] {
    action = [&] {
      auto p = load(input);
      report.set("input", p.label);
      report.set("mov", geom::to_string(engine::moving_cone(p)));
    };
  });

  auto* chamber = with_input(app.add_subcommand("git-chamber", "GIT chamber of a class"));
  chamber->add_option("--class", cls, "Class as comma-separated integers")->required();
  chamber->callback([&] {
    action = [&] {
      auto p = load(input);
      auto w = parse_class(cls);
      auto omega = engine::orbit_cones(p, engine::enumerate_ffaces(p, face_options()));
      report.set("input", p.label);
      report.set("class", to_string(w));
      report.set("chamber", geom::to_string(engine::git_chamber(omega, engine::effective_cone(p), w)));
    };
  });

  auto* fan = with_input(app.add_subcommand("git-fan", "Maximal GIT chambers"));
  fan->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      std::vector<geom::Cone> movable;
      for (auto i : a.movable_chambers()) movable.push_back(a.fan.chambers[i]);
      report.set("input", p.label);
      report.set("eff", geom::to_string(a.eff));
      report.set("mov", geom::to_string(a.mov));
      report.set("maximal_chambers", a.fan.size());
      report.set("movable_chambers", movable.size());
      report.set("chambers", cone_list(a.fan.chambers));
      report.set("movable", cone_list(movable));
    };
  });

  auto* bunch = with_input(app.add_subcommand("bunch", "Bunch of orbit cones of a chamber"));
  bunch->add_option("--ample", ample, "Class interior to the chamber")->required();
  bunch->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      auto i = ample_index(a, parse_class(ample));
      auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
      std::vector<geom::Cone> members;
      for (auto m : phi.members) members.push_back(a.omega.cones[m]);
      report.set("input", p.label);
      report.set("chamber", geom::to_string(a.fan.chambers[i]));
      report.set("members", cone_list(members));
    };
  });

  auto* same = with_input(app.add_subcommand("same-sbl", "Compare stable base loci of two classes"));
  same->add_option("--ample", ample, "Class interior to the ample chamber")->required();
  same->add_option("--w1", w1, "First class")->required();
  same->add_option("--w2", w2, "Second class")->required();
  same->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      auto i = ample_index(a, parse_class(ample));
      auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
      auto x = parse_class(w1), y = parse_class(w2);
      bool s = engine::same_sbl(a.omega, phi, x, y);
      bool t = engine::same_sbl_by_intersections(a.omega, phi, x, y);
      report.set("input", p.label);
      report.set("ample_chamber", geom::to_string(a.fan.chambers[i]));
      report.set("same_sbl", s);
      report.set("same_by_intersections", t);
      report.set("agree", s == t);
    };
  });

  auto* sbl = with_input(app.add_subcommand("sbl", "Stable base locus of a class"));
  sbl->add_option("--ample", ample, "Class interior to the ample chamber")->required();
  sbl->add_option("--class", cls, "Class")->required();
  sbl->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      auto i = ample_index(a, parse_class(ample));
      auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
      auto rep = engine::stable_base_locus(p, a.omega, phi, parse_class(cls));
      std::vector<IndexSet> strata;
      for (const auto& f : rep.strata) strata.push_back(f.indices);
      report.set("input", p.label);
      report.set("ample_chamber", geom::to_string(a.fan.chambers[i]));
      report.set("class", cls);
      report.set("strata", face_list(strata, p));
      report.set("closure", rep.human_form);
    };
  });

  auto* triples = with_input(app.add_subcommand("find-triples", "Ample choices with merged SBL chambers"));
  triples->add_flag("--widen", widen, "Try every maximal chamber as ample, not only movable ones");
  triples->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      auto rep = engine::find_triples(a, widen);
      json list = json::array();
      for (const auto& t : rep.triples)
        list.push_back(json{{"ample", geom::to_string(a.fan.chambers[t.ample])},
                            {"first", geom::to_string(a.fan.chambers[t.first])},
                            {"second", geom::to_string(a.fan.chambers[t.second])}});
      report.set("input", p.label);
      report.set("git_chambers", rep.git_chamber_count);
      report.set("ample_candidates", rep.per_ample.size());
      report.set("triples", rep.triples.size());
      report.set("merged", list);
    };
  });

  auto* r2 = with_input(app.add_subcommand("rank2", "Rank-two criteria"));
  r2->add_option("--ample", ample, "Class interior to the ample chamber")->required();
  r2->callback([&] {
    action = [&] {
      auto p = load(input);
      auto opts = poly::default_groebner_options();
      auto a = engine::analyze(p, face_options());
      auto i = ample_index(a, parse_class(ample));
      auto m2 = rank2::check_main2(p, a.fan.chambers[i], opts);
      auto mc = rank2::check_main_conditions(p, a, i, opts);
      auto part = engine::analyze_ample(a, i).partition;
      auto dual = rank2::sbl_partition_rank2(p, a, i, opts);
      json pairs = json::array();
      for (const auto& pv : mc.pairs)
        pairs.push_back(json{{"smaller", geom::to_string(a.fan.chambers[pv.smaller])},
                             {"larger", geom::to_string(a.fan.chambers[pv.larger])},
                             {"holds", pv.holds}});
      report.set("input", p.label);
      report.set("ample_chamber", geom::to_string(a.fan.chambers[i]));
      report.set("h_plus", m2.h_plus);
      report.set("h_minus", m2.h_minus);
      report.set("codim", m2.c);
      report.set("main2", m2.verdict == rank2::Verdict::applies ? "applies" : "inconclusive");
      report.set("crit1", rank2::check_crit1(p, a, i));
      report.set("main_conditions", mc.all_hold ? "hold" : "fail");
      report.set("pairs", pairs);
      report.set("sbl_classes", part.size());
      report.set("partition", partition_json(a, part));
      report.set("dual_route_agrees", same_partition(part, dual));
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate presentations");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("-o,--output", output, "Output file (default: standard output)");
  auto emit = [&](const cox::CoxPresentation& p) {
    if (output.empty()) out << cox::print(p);
    else write_file(output, cox::print(p));
  };
  long r = 1, n = 3, index = 1, seed = 0;
  std::string family, params, matrix;
  std::size_t m = 1;
  auto* grass = gen->add_subcommand("grassmannian", "Blow-up of G(r,n) at a point");
  grass->add_option("--r", r)->required();
  grass->add_option("--n", n)->required();
  grass->callback([&] {
    action = [&] {
      if (r < 0 || n <= r) throw PreconditionError("need 0 <= r < n");
      emit(presentations::gen_grassmannian_blowup(r, n));
    };
  });
  auto* toric = gen->add_subcommand("toric", "Toric Cox ring from rays or from a grading");
  auto* rays_opt = toric->add_option("--rays", matrix, "Ray matrix rows, e.g. 1,0,-1;0,1,-1");
  toric->add_option("--grading", params, "Grading matrix rows")->excludes(rays_opt);
  toric->callback([&] {
    action = [&] {
      if (!matrix.empty()) emit(presentations::gen_toric_from_rays(parse_matrix(matrix)));
      else if (!params.empty()) emit(presentations::gen_toric_from_grading(parse_matrix(params), "toric"));
      else throw UsageError("gen toric needs --rays or --grading");
    };
  });
  auto* fhn = gen->add_subcommand("fhn16", "Picard rank two complexity one families");
  fhn->add_option("--family", family, "3, 6, 8 or 12")->required();
  fhn->add_option("--params", params, "Comma-separated parameters");
  fhn->add_option("--m", m, "Number of extra variables");
  fhn->callback([&] {
    action = [&] {
      std::vector<long> v;
      if (!params.empty())
        for (const auto& x : parse_class(params)) v.push_back(x.get_si());
      auto need = [&](std::size_t k) {
        if (v.size() != k) throw UsageError("family " + family + " takes " + std::to_string(k) + " parameters");
      };
      if (family == "3") need(1), emit(presentations::gen_fhn16_no3(v[0]));
      else if (family == "6") need(3), emit(presentations::gen_fhn16_no6(v[0], v[1], v[2], m));
      else if (family == "8") emit(presentations::gen_fhn16_no8(v, m));
      else if (family == "12") need(3), emit(presentations::gen_fhn16_no12(v[0], v[1], v[2], m));
      else throw UsageError("unknown family " + family);
    };
  });
  auto* sharp = gen->add_subcommand("rank2-sharp", "Seeded rank-two complete intersection");
  sharp->add_option("--seed", seed)->required();
  sharp->callback([&] { action = [&] { emit(presentations::gen_rank2_sharp(presentations::rank2_sharp_seed(seed))); }; });
  auto* smooth = gen->add_subcommand("rank3-smooth", "Smooth toric threefold of Picard rank three");
  smooth->add_option("--index", index)->required();
  smooth->callback([&] { action = [&] { emit(presentations::gen_rank3_smooth(int(index))); }; });
  std::string dir = "corpus";
  auto* corp = gen->add_subcommand("corpus", "Write every corpus entry and its expectations");
  corp->add_option("--dir", dir);
  corp->callback([&] {
    action = [&] {
      presentations::write_corpus(dir);
      report.set("dir", dir);
      report.set("entries", presentations::corpus().size());
    };
  });

  auto* render = with_input(app.add_subcommand("render", "SVG diagram of the GIT fan"));
  render->add_option("--ample", ample, "Class interior to the ample chamber");
  render->add_option("-o,--output", output, "SVG file")->required();
  render->callback([&] {
    action = [&] {
      auto p = load(input);
      auto a = engine::analyze(p, face_options());
      std::optional<std::size_t> i;
      if (!ample.empty()) i = ample_index(a, parse_class(ample));
      write_file(output, render::render_section(p, a, i));
      report.set("input", p.label);
      report.set("chambers", a.fan.size());
      report.set("output", output);
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cox::CoxParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DimensionMismatch& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
  // gen writes the presentation itself and leaves the report empty.
  if (!report.empty()) out << (as_json ? report.json_text() : report.text());
  return kOk;
}

}  // namespace mds::cli
