#include "ekr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ekr/bounds.hpp"
#include "ekr/design.hpp"
#include "ekr/ekr.hpp"
#include "ekr/error.hpp"

namespace ekr::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string design;
  std::string input;
};

void add_source(CLI::App* app, Source& src) {
  app->add_option("--design", src.design, "builtin design, e.g. pg3:2, sts13:1, kgraph:7");
  app->add_option("--input", src.input, "design file");
}

Design load_source(const Source& src) {
  if (src.design.empty() == src.input.empty()) {
    throw UsageError("give exactly one of --design and --input");
  }
  return src.design.empty() ? load_design(src.input) : builtin_design(src.design);
}

int default_workers() {
  if (const char* env = std::getenv("EKR_WORKERS")) {
    char* end = nullptr;
    const long w = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && w >= 1 && w <= 1024) return static_cast<int>(w);
  }
  return 1;
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

json value_json(const bounds::Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, SurdExpr>) {
          return json{{"a", x.a.str()}, {"b", x.b.str()}, {"n", x.n.str()}};
        } else {
          return json{{"c0", x.c0.str()}, {"c1", x.c1.str()}, {"c2", x.c2.str()}, {"m", x.m.str()}};
        }
      },
      v);
}

std::string value_text(const bounds::Value& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

json report_json(const bounds::BoundReport& rep) {
  json inputs = json::object();
  for (const auto& [name, value] : rep.inputs) inputs[name] = value;
  json branches = json::array();
  for (const auto& b : rep.branches) branches.push_back(value_json(b));
  json brackets = json::array();
  for (const auto& br : rep.brackets) {
    brackets.push_back(
        {{"value", br.value.str()}, {"degree", br.degree}, {"floor_root", br.floor_root.str()}});
  }
  return json{{"formula", bounds::formula_key(rep.formula)},
              {"inputs", inputs},
              {"value", value_json(rep.value)},
              {"floor", rep.floor.str()},
              {"active_branch", rep.active_branch},
              {"branches", branches},
              {"brackets", brackets}};
}

json certificate_json(const bounds::SweepCertificate& c) {
  json ranges = json::object();
  for (const auto& [name, value] : c.ranges) ranges[name] = value;
  json j{{"lemma", c.lemma},
         {"ranges", ranges},
         {"cases", c.cases},
         {"comparisons", c.comparisons},
         {"failures", c.failures},
         {"certified", c.certified()}};
  if (c.lemma == "interval4") j["boundary_violations"] = c.boundary_violations;
  return j;
}

json profile_json(const CoverProfile& p) {
  return json{{"covered", p.covered}, {"k_hist", p.k_hist}, {"k_S", p.k_s}, {"b_offset", p.b_offset}};
}

// ---- verbs ----

struct Common {
  Source src;
  std::string format = "text";
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

int do_generate(const Common& c, const std::string& out_path, std::ostream& out) {
  const Design d = load_source(c.src);
  if (!out_path.empty()) {
    save_design(d, out_path);
    return 0;
  }
  if (c.format == "json") {
    out << json{{"v", d.v()}, {"k", d.k()}, {"b", d.b()}, {"r", d.r()}, {"blocks", d.blocks()}}.dump()
        << '\n';
  } else {
    write_design(out, d);
  }
  return 0;
}

std::vector<std::vector<int>> read_families(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<std::vector<int>> fams;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    std::vector<int> fam;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("expected a block index, got '" + tok + "'", line_no);
      fam.push_back(v);
    }
    fams.push_back(std::move(fam));
  }
  return fams;
}

int do_validate(const Common& c, const std::string& families_path, std::ostream& out) {
  const Design d = load_source(c.src);
  const auto p = d.params();
  json j{{"valid", true}, {"v", p.v}, {"k", p.k}, {"b", p.b}, {"r", p.r}, {"R", p.R}};
  std::size_t violations = 0;
  std::vector<std::string> problems;
  if (!families_path.empty()) {
    const auto fams = read_families(families_path);
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const auto set = BlockSet::of(d, fams[i]);
      std::string issue;
      if (!is_intersecting(set)) {
        issue = "not intersecting";
      } else if (!is_maximal(set)) {
        issue = "not maximal";
      }
      if (!issue.empty()) {
        ++violations;
        problems.push_back("family " + std::to_string(i + 1) + ": " + issue);
      }
    }
    j["families"] = fams.size();
    j["violations"] = violations;
    j["problems"] = problems;
  }
  if (c.format == "json") {
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "v,k,b,r,R\n" << p.v << ',' << p.k << ',' << p.b << ',' << p.r << ',' << p.R << '\n';
  } else {
    out << "valid 2-(" << p.v << "," << p.k << ",1) design: b=" << p.b << " r=" << p.r
        << " R=" << p.R << '\n';
    if (!families_path.empty()) {
      out << j["families"].get<std::size_t>() << " families, " << violations << " violations\n";
      for (const auto& s : problems) out << s << '\n';
    }
  }
  return violations == 0 ? 0 : 1;
}

int do_enumerate(const Common& c, const EnumerateOptions& opt, std::ostream& out) {
  const Design d = load_source(c.src);
  const auto res = enumerate_maximal_ekr(d, opt);
  if (c.format == "json") {
    json counts = json::object();
    for (auto [size, n] : res.size_counts) counts[std::to_string(size)] = n;
    json j{{"total", res.total}, {"size_counts", counts}};
    if (!opt.size_only) {
      json fams = json::array();
      for (const auto& f : res.families) fams.push_back(f.indices());
      j["families"] = fams;
    }
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    if (opt.size_only) {
      out << "size,count\n";
      for (auto [size, n] : res.size_counts) out << size << ',' << n << '\n';
    } else {
      out << "size,blocks\n";
      for (const auto& f : res.families) out << f.size() << ',' << join(f.indices()) << '\n';
    }
  } else if (opt.size_only) {
    for (auto [size, n] : res.size_counts) out << size << ' ' << n << '\n';
  } else {
    for (const auto& f : res.families) out << join(f.indices()) << '\n';
  }
  return 0;
}

int do_classify(const Common& c, EnumerateOptions opt, int exact_size, std::ostream& out) {
  const Design d = load_source(c.src);
  if (exact_size > 0) opt.min_size = std::max(opt.min_size, exact_size);
  auto res = enumerate_maximal_ekr(d, opt);
  if (exact_size > 0) {
    std::erase_if(res.families, [&](const BlockSet& f) { return f.size() != exact_size; });
  }
  const auto types = classify(d, res.families);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& t : types) {
      arr.push_back({{"label", t.type.label},
                     {"size", t.type.size},
                     {"count", t.count},
                     {"profile", profile_json(t.type.profile)},
                     {"canonical_code", t.type.canonical_code},
                     {"witness", t.witness.indices()}});
    }
    out << json{{"families", res.families.size()}, {"types", arr}}.dump() << '\n';
  } else if (c.format == "csv") {
    out << "label,size,count,covered,k_S,witness\n";
    for (const auto& t : types) {
      out << t.type.label << ',' << t.type.size << ',' << t.count << ','
          << t.type.profile.covered << ',' << t.type.profile.k_s << ','
          << join(t.witness.indices()) << '\n';
    }
  } else {
    out << std::left << std::setw(10) << "type" << std::setw(6) << "size" << std::setw(8)
        << "count" << std::setw(9) << "covered" << std::setw(5) << "k_S"
        << "witness\n";
    for (const auto& t : types) {
      out << std::setw(10) << t.type.label << std::setw(6) << t.type.size << std::setw(8)
          << t.count << std::setw(9) << t.type.profile.covered << std::setw(5)
          << t.type.profile.k_s << join(t.witness.indices()) << '\n';
    }
    out << res.families.size() << " families, " << types.size() << " types\n";
  }
  return 0;
}

int do_onan(const Common& c, bool verdict, int workers, std::ostream& out) {
  const Design d = load_source(c.src);
  if (verdict) {
    const auto v = classify_onan_free(d, workers);
    json j{{"confirmed", v.confirmed},
           {"families", v.families},
           {"pencils", v.pencils},
           {"triangles", v.triangles}};
    if (v.counterexample) j["counterexample"] = v.counterexample->indices();
    if (c.format == "json") {
      out << j.dump() << '\n';
    } else {
      out << (v.confirmed ? "confirmed" : "counterexample found") << ": " << v.families
          << " maximal families, " << v.pencils << " pencils, " << v.triangles << " triangles\n";
      if (v.counterexample) out << join(v.counterexample->indices()) << '\n';
    }
    return v.confirmed ? 0 : 1;
  }
  const auto q = find_onan(d);
  if (c.format == "json") {
    json j{{"found", q.has_value()}};
    if (q) j["blocks"] = *q;
    out << j.dump() << '\n';
  } else if (q) {
    out << "O'Nan configuration: blocks " << (*q)[0] << ' ' << (*q)[1] << ' ' << (*q)[2] << ' '
        << (*q)[3] << '\n';
  } else {
    out << "no O'Nan configuration\n";
  }
  return 0;
}

struct BoundArgs {
  std::string formula;
  std::optional<long long> k, r, R, b, q, ks, a, v;
};

long long need(const std::optional<long long>& x, const char* name) {
  if (!x) throw UsageError(std::string("missing --") + name);
  return *x;
}

int do_bound(const BoundArgs& a, const std::string& format, std::ostream& out) {
  const std::string& f = a.formula;
  auto emit_report = [&](const bounds::BoundReport& rep) {
    if (format == "json") {
      out << report_json(rep).dump() << '\n';
    } else {
      out << "formula " << bounds::formula_key(rep.formula) << '\n'
          << "value " << value_text(rep.value) << '\n'
          << "floor " << rep.floor << '\n'
          << "branch " << rep.active_branch << '\n';
      for (std::size_t i = 0; i < rep.branches.size(); ++i) {
        out << "branch" << i + 1 << ' ' << value_text(rep.branches[i]) << '\n';
      }
    }
    return 0;
  };
  auto emit_scalar = [&](const std::string& key, const json& value) {
    if (format == "json") {
      out << json{{"formula", f}, {key, value}}.dump() << '\n';
    } else {
      out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return 0;
  };
  if (f == "mainlemma" || f == "cover") {
    return emit_report(bounds::cover_bound(need(a.k, "k"), need(a.r, "r"), need(a.b, "b")));
  }
  if (f == "mainlemmaR" || f == "cover-deficit") {
    return emit_report(bounds::cover_bound_deficit(need(a.k, "k"), need(a.R, "R"), need(a.b, "b")));
  }
  if (f == "unital-mainlemma" || f == "unital-cover") {
    return emit_report(bounds::unital_cover_bound(need(a.q, "q"), need(a.b, "b")));
  }
  if (f == "unital-second-largest") {
    return emit_report(bounds::unital_second_largest_bound(need(a.q, "q")));
  }
  if (f == "family-size") {
    return emit_scalar("value", bounds::family_size_bound(static_cast<int>(need(a.k, "k")),
                                                          static_cast<int>(need(a.ks, "ks"))));
  }
  if (f == "cover-range") {
    const auto [lo, hi] = bounds::near_pencil_cover_range(need(a.k, "k"), need(a.a, "a"));
    if (format == "json") {
      out << json{{"formula", f}, {"low", lo.str()}, {"high", hi.str()}}.dump() << '\n';
    } else {
      out << "low " << lo.str() << "\nhigh " << hi.str() << '\n';
    }
    return 0;
  }
  if (f == "large-r") {
    return emit_scalar("verdict",
                       bounds::verdict_name(bounds::large_r_verdict(need(a.k, "k"), need(a.r, "r"))));
  }
  if (f == "maintheorem") {
    return emit_scalar("verdict", bounds::verdict_name(bounds::pencil_classification_verdict(
                                      need(a.k, "k"), need(a.r, "r"))));
  }
  if (f == "pencil-bound-v") {
    return emit_scalar("holds", bounds::pencil_bound_by_v(need(a.k, "k"), need(a.v, "v")));
  }
  throw UsageError("unknown formula '" + f + "'");
}

struct SweepArgs {
  std::string lemma;
  std::string k = "all";
  long long k_min = 14, k_max = 50;
  std::string sample = "extremes";
  std::optional<long long> l, a, b, r;
  std::size_t budget = 10'000'000;
};

int do_sweep(const SweepArgs& s, const std::string& format, std::ostream& out) {
  std::vector<bounds::SweepCertificate> certs;
  bool ok = true;
  if (s.lemma == "interval4") {
    std::vector<int> ks;
    if (s.k == "all") {
      for (int k = 4; k <= 13; ++k) ks.push_back(k);
    } else {
      try {
        ks.push_back(std::stoi(s.k));
      } catch (const std::exception&) {
        throw UsageError("--k must be 'all' or an integer");
      }
    }
    for (int k : ks) {
      certs.push_back(bounds::sweep_small_k(k));
      ok = ok && certs.back().certified() && !certs.back().boundary_violations.empty();
    }
  } else if (s.lemma == "berekening14") {
    const auto mode = s.sample == "full" ? bounds::CSample::kExhaustive
                                         : bounds::CSample::kExtremesAndMidpoint;
    certs.push_back(bounds::sweep_large_k(s.k_min, s.k_max, mode));
    ok = certs.back().certified();
  } else if (s.lemma == "maximalisatie") {
    certs.push_back(bounds::verify_tuple_maximization(need(s.l, "l"), need(s.a, "a"),
                                                      need(s.b, "b"), need(s.r, "r"), s.budget));
    ok = certs.back().certified();
  } else {
    throw UsageError("unknown lemma '" + s.lemma + "'");
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    out << json{{"certificates", arr}, {"all_certified", ok}}.dump() << '\n';
  } else if (format == "csv") {
    out << "lemma,ranges,cases,comparisons,failures\n";
    for (const auto& c : certs) {
      std::string ranges;
      for (const auto& [name, value] : c.ranges) ranges += name + "=" + value + ";";
      out << c.lemma << ",\"" << ranges << "\"," << c.cases << ',' << c.comparisons << ','
          << c.failures.size() << '\n';
    }
  } else {
    for (const auto& c : certs) {
      out << c.lemma;
      for (const auto& [name, value] : c.ranges) out << ' ' << name << '=' << value;
      out << ": " << c.cases << " cases, " << c.failures.size() << " failures";
      if (c.lemma == "interval4") {
        out << ", " << c.boundary_violations.size() << " violations at R_k+1";
      }
      out << (c.certified() ? " [certified]" : " [FAILED]") << '\n';
    }
  }
  return ok ? 0 : 1;
}

int do_max_size(const Common& c, std::ostream& out) {
  const Design d = load_source(c.src);
  const auto m = max_ekr_size(d);
  if (c.format == "json") {
    out << json{{"size", m.size}, {"witness", m.witness.indices()}}.dump() << '\n';
  } else {
    out << "size " << m.size << "\nwitness " << join(m.witness.indices()) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersecting block families in 2-(v,k,1) designs", "ekr"};
  app.require_subcommand(1);

  Common common;
  std::string out_path, families_path;
  EnumerateOptions enum_opt;
  enum_opt.workers = default_workers();
  std::size_t max_count = 0;
  int exact_size = 0;
  bool verdict = false;
  BoundArgs bound_args;
  SweepArgs sweep_args;

  auto* gen = app.add_subcommand("generate", "write a design in the text format");
  add_source(gen, common.src);
  add_format(gen, common.format);
  gen->add_option("--out", out_path, "output file");

  auto* val = app.add_subcommand("validate", "check the design axioms and optional families");
  add_source(val, common.src);
  add_format(val, common.format);
  val->add_option("--families", families_path, "file with one family per line");

  auto add_enum_flags = [&](CLI::App* sub) {
    sub->add_option("--min-size", enum_opt.min_size, "skip families smaller than this")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-count", max_count, "fail once more families are found");
    sub->add_option("--workers", enum_opt.workers, "parallel workers")->check(CLI::Range(1, 1024));
  };

  auto* en = app.add_subcommand("enumerate", "list all maximal intersecting families");
  add_source(en, common.src);
  add_format(en, common.format);
  add_enum_flags(en);
  en->add_flag("--size-only", enum_opt.size_only, "print only size counts");

  auto* cl = app.add_subcommand("classify", "group maximal families into isomorphism types");
  add_source(cl, common.src);
  add_format(cl, common.format);
  add_enum_flags(cl);
  cl->add_option("--size", exact_size, "only families of exactly this size");

  auto* on = app.add_subcommand("onan", "search for an O'Nan configuration");
  add_source(on, common.src);
  add_format(on, common.format);
  on->add_flag("--verdict", verdict, "also check that every maximal family is a pencil or triangle");
  on->add_option("--workers", enum_opt.workers, "parallel workers")->check(CLI::Range(1, 1024));

  auto* bo = app.add_subcommand("bound", "evaluate a bound formula exactly");
  add_format(bo, common.format);
  bo->add_option("--formula", bound_args.formula, "formula id")->required();
  bo->add_option("--k", bound_args.k);
  bo->add_option("--r", bound_args.r);
  bo->add_option("--R", bound_args.R);
  bo->add_option("--b", bound_args.b);
  bo->add_option("--q", bound_args.q);
  bo->add_option("--ks", bound_args.ks);
  bo->add_option("--a", bound_args.a);
  bo->add_option("--v", bound_args.v);

  auto* sw = app.add_subcommand("sweep", "run a certified parameter sweep");
  add_format(sw, common.format);
  sw->add_option("--lemma", sweep_args.lemma, "interval4, berekening14 or maximalisatie")
      ->required();
  sw->add_option("--k", sweep_args.k, "interval4: 'all' or one k");
  sw->add_option("--k-min", sweep_args.k_min);
  sw->add_option("--k-max", sweep_args.k_max);
  sw->add_option("--sample", sweep_args.sample)->check(CLI::IsMember({"extremes", "full"}));
  sw->add_option("--l", sweep_args.l);
  sw->add_option("--a", sweep_args.a);
  sw->add_option("--b", sweep_args.b);
  sw->add_option("--r", sweep_args.r);
  sw->add_option("--budget", sweep_args.budget);

  auto* mx = app.add_subcommand("max-size", "largest intersecting family");
  add_source(mx, common.src);
  add_format(mx, common.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (max_count > 0) enum_opt.max_count = max_count;
    if (*gen) return do_generate(common, out_path, out);
    if (*val) return do_validate(common, families_path, out);
    if (*en) return do_enumerate(common, enum_opt, out);
    if (*cl) return do_classify(common, enum_opt, exact_size, out);
    if (*on) return do_onan(common, verdict, enum_opt.workers, out);
    if (*bo) return do_bound(bound_args, common.format, out);
    if (*sw) return do_sweep(sweep_args, common.format, out);
    if (*mx) return do_max_size(common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << error_code_name(e.code()) << ": " << e.what();
    if (e.line > 0) err << " (line " << e.line << ')';
    err << '\n';
    return 1;
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ekr::cli
