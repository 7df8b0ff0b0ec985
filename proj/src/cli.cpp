#include "pcw/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pcw/dyck.hpp"
#include "pcw/error.hpp"
#include "pcw/forms.hpp"
#include "pcw/gentle.hpp"
#include "pcw/io.hpp"
#include "pcw/render.hpp"
#include "pcw/verify.hpp"
#include "pcw/words.hpp"

namespace pcw {

namespace {

using nlohmann::json;

struct Settings {
  bool json_output = false;
  std::uint64_t seed = VerifyOptions{}.seed;
};

class Printer {
 public:
  Printer(const Settings& s, std::ostream& out) : settings_(s), out_(out) {}

  void emit(const json& j, const std::string& human) const {
    if (settings_.json_output) {
      out_ << j.dump() << '\n';
    } else {
      out_ << human << '\n';
    }
  }

 private:
  const Settings& settings_;
  std::ostream& out_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string show(const GVector& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s;
}

// Word over {2..n} for band commands. Letter input a, b, c ... means 2, 3, 4 ...
Word band_word(const std::string& text) {
  ParsedWord p = parse_word(text);
  if (p.encoding != WordEncoding::Letters) return p.word;
  std::vector<int> shifted;
  for (int x : p.word) shifted.push_back(x + 1);
  return Word(std::move(shifted));
}

int default_n(const Word& w, int n) { return n > 0 ? n : std::max(2, w.max_letter()); }

// "walk:a1 b1-", "module.json", or a word, each optionally followed by @p/q.
BandModule module_from_spec(std::string spec, int n, const Rational& lambda) {
  Rational l = lambda;
  if (const auto at = spec.rfind('@'); at != std::string::npos) {
    l = parse_rational(spec.substr(at + 1));
    spec = spec.substr(0, at);
  }
  if (spec.rfind("walk:", 0) == 0) {
    auto steps = parse_walk(spec.substr(5));
    int top = 1;
    for (const auto& s : steps) top = std::max(top, s.arrow.index);
    return band_module(BandWalk(std::move(steps), n > 0 ? n : top + 1), l);
  }
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot read " + spec);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(spec + ": " + e.what());
    }
    return band_module_from_json(j);
  }
  const Word w = band_word(spec);
  return band_module(psi(w, default_n(w, n)), l);
}

std::string module_text(const BandModule& m) {
  std::ostringstream out;
  out << "dims";
  for (auto d : m.dims()) out << ' ' << d;
  out << "\nlambda " << format_rational(m.lambda());
  for (std::size_t s = 0; s < m.mats().size(); ++s) {
    const RationalMatrix& mat = m.mats()[s];
    out << '\n' << arrow_name(BandModule::arrow_at(s)) << " (" << mat.rows() << 'x' << mat.cols()
        << ')';
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      out << "\n ";
      for (std::size_t k = 0; k < mat.cols(); ++k) out << ' ' << format_rational(mat(i, k));
    }
  }
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  if (const char* fmt = std::getenv("PCW_FORMAT"); fmt && std::string(fmt) == "json") {
    settings.json_output = true;
  }
  Printer print(settings, out);
  std::function<void()> action;

  CLI::App app{"Perfectly clustering words and band bricks over Lambda_n", "pcw"};
  app.require_subcommand(1);
  app.add_flag("--json", settings.json_output, "Machine-readable JSON output");
  app.add_option("--seed", settings.seed, "Seed for sampled sweeps");

  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string word;
  auto* bw = sub("bw", "Burrows-Wheeler transform");
  bw->add_option("word", word)->required();
  bw->callback([&] {
    action = [&] {
      const ParsedWord p = parse_word(word);
      const Word b = bw_transform(p.word);
      print.emit({{"word", p.word.letters()}, {"bw", b.letters()}}, format_word(b, p.encoding));
    };
  });

  auto* bwi = sub("bw-inverse", "Necklace whose BW transform is the given word");
  bwi->add_option("word", word)->required();
  bwi->callback([&] {
    action = [&] {
      const ParsedWord p = parse_word(word);
      const Necklace nk = bw_inverse(p.word);
      print.emit({{"word", p.word.letters()}, {"necklace", nk.representative().letters()}},
                 format_word(nk.representative(), p.encoding));
    };
  });

  std::string method = "bw";
  auto* pc = sub("pcw", "Is the word perfectly clustering");
  pc->add_option("word", word)->required();
  pc->add_option("--method", method, "bw, factors or both")
      ->check(CLI::IsMember({"bw", "factors", "both"}));
  pc->callback([&] {
    action = [&] {
      const Word w = parse_word(word).word;
      json j{{"word", w.letters()}};
      bool result = false;
      if (method == "bw" || method == "both") {
        result = is_perfectly_clustering(w);
        j["bw"] = result;
      }
      if (method == "factors" || method == "both") {
        const bool f = is_perfectly_clustering_by_factors(w);
        j["factors"] = f;
        if (method == "both" && f != result) {
          throw Error(ErrorKind::InternalInconsistency, "the two criteria disagree");
        }
        result = f;
      }
      j["perfectly_clustering"] = result;
      print.emit(j, yes_no(result));
    };
  });

  auto* ph = sub("phi", "Gessel-Reutenauer multiset of necklaces");
  ph->add_option("word", word)->required();
  ph->callback([&] {
    action = [&] {
      const ParsedWord p = parse_word(word);
      const NecklaceMultiset m = phi(p.word);
      print.emit(to_json(m), format_necklaces(m, p.encoding));
    };
  });

  std::string json_text;
  auto* phi_inv = sub("phi-inverse", "Word with the given necklace multiset");
  phi_inv->add_option("json", json_text, "JSON array of words")->required();
  phi_inv->callback([&] {
    action = [&] {
      json j;
      try {
        j = json::parse(json_text);
      } catch (const json::parse_error& e) {
        throw ParseError(e.what());
      }
      const Word w = phi_inverse(necklaces_from_json(j));
      const bool textual = !j.empty() && j.front().is_string();
      const WordEncoding enc =
          textual ? parse_word(j.front().get<std::string>()).encoding : WordEncoding::Integers;
      print.emit(w.letters(), format_word(w, enc));
    };
  });

  std::string mode;
  std::string csv;
  auto* gv = sub("gvec", "g-vector tools: check, dyck, words, decompose");
  gv->add_option("mode", mode)->required()->check(
      CLI::IsMember({"check", "dyck", "words", "decompose"}));
  gv->add_option("gvector", csv, "Comma-separated integers")->required();
  gv->callback([&] {
    action = [&] {
      const GVector g = parse_int_list(csv);
      if (mode == "check") {
        const bool ok = validate_gvector(g);
        print.emit({{"gvector", g}, {"valid", ok}}, yes_no(ok));
      } else if (mode == "dyck") {
        const Multislalom m = reconstruct_multislalom(g);
        std::vector<int> labels;
        json chords = json::array();
        for (std::size_t i = 0; i < m.diagram.steps.size(); ++i) {
          labels.push_back(m.diagram.steps[i].label);
          if (m.diagram.steps[i].dir == StepDir::Up) chords.push_back({i, m.partner[i]});
        }
        std::ostringstream human;
        human << m.diagram.dyck_word() << '\n';
        for (std::size_t i = 0; i < labels.size(); ++i) human << (i ? " " : "") << labels[i];
        print.emit({{"gvector", g},
                    {"dyck_word", m.diagram.dyck_word()},
                    {"labels", labels},
                    {"chords", chords},
                    {"components", m.components.size()}},
                   human.str());
      } else if (mode == "words") {
        const NecklaceMultiset m = circular_words(g);
        print.emit(to_json(m), format_necklaces(m, WordEncoding::Digits));
      } else {
        const auto families = semibrick_decomposition(g);
        json comps = json::array();
        std::ostringstream human;
        std::size_t count = 0;
        for (const auto& f : families) {
          count += f.multiplicity;
          comps.push_back({{"gvector", f.gvector},
                           {"multiplicity", f.multiplicity},
                           {"walk", f.walk.to_string()}});
          human << show(f.gvector) << " x" << f.multiplicity << "  " << f.walk.to_string() << '\n';
        }
        const bool brick = count == 1;
        human << "is_brick " << yes_no(brick);
        print.emit({{"gvector", g}, {"components", comps}, {"is_brick", brick}}, human.str());
      }
    };
  });

  std::vector<std::string> specs;
  int n = 0;
  std::string lambda_text = "1";
  auto* band = sub("band", "Band walks and modules: walk, module, brick, hom");
  band->add_option("mode", mode)->required()->check(
      CLI::IsMember({"walk", "module", "brick", "hom"}));
  band->add_option("specs", specs, "Word(s), walk:<tokens>, or module .json files")
      ->required()
      ->expected(1, 2);
  band->add_option("--n", n, "Number of vertices (default: largest letter)");
  band->add_option("--lambda", lambda_text, "Band parameter p/q");
  band->callback([&] {
    action = [&] {
      const Rational lambda = parse_rational(lambda_text);
      const std::size_t want = mode == "hom" ? 2 : 1;
      if (specs.size() != want) {
        throw ParseError("band " + mode + " takes " + std::to_string(want) + " argument(s)");
      }
      if (mode == "hom") {
        const BandModule x = module_from_spec(specs[0], n, lambda);
        const BandModule y = module_from_spec(specs[1], n, lambda);
        const std::size_t xy = hom_dim(x, y);
        const std::size_t yx = hom_dim(y, x);
        print.emit({{"hom", xy}, {"hom_reverse", yx}, {"ext1", ext1_dim(x, y)},
                    {"ext1_reverse", ext1_dim(y, x)}},
                   "dim Hom(X,Y) = " + std::to_string(xy) + "\ndim Hom(Y,X) = " +
                       std::to_string(yx));
        return;
      }
      const Word w = band_word(specs[0]);
      const int nn = default_n(w, n);
      const BandWalk z = psi(w, nn);
      if (mode == "walk") {
        const GVector g = g_vector_of_band(z);
        print.emit({{"word", w.letters()},
                    {"n", nn},
                    {"walk", z.to_string()},
                    {"canonical", z.canonical().to_string()},
                    {"gvector", g}},
                   z.to_string());
      } else if (mode == "module") {
        const BandModule m = band_module(z, lambda);
        print.emit(to_json(m), module_text(m));
      } else {
        const BandModule m = band_module(z, lambda);
        const std::size_t end = hom_dim(m, m);
        print.emit({{"word", w.letters()}, {"end_dim", end}, {"is_brick", end == 1}},
                   yes_no(end == 1));
      }
    };
  });

  std::string csv2;
  auto* eu = sub("euler", "Euler form of two g-vectors");
  eu->add_option("x", csv)->required();
  eu->add_option("y", csv2)->required();
  eu->callback([&] {
    action = [&] {
      const long long v = euler_form(parse_int_list(csv), parse_int_list(csv2));
      print.emit({{"euler", v}}, std::to_string(v));
    };
  });

  std::vector<std::string> fan_args;
  int box = 2;
  auto* fan = sub("fan", "brick4 <g>, compatible <g1> <g2>, maxcompat --n N --box B");
  fan->add_option("mode", mode)->required()->check(
      CLI::IsMember({"brick4", "compatible", "maxcompat"}));
  fan->add_option("gvectors", fan_args);
  fan->add_option("--n", n, "Number of vertices");
  fan->add_option("--box", box, "Bound on absolute entries");
  fan->callback([&] {
    action = [&] {
      if (mode == "brick4") {
        if (fan_args.size() != 1) throw ParseError("fan brick4 takes one g-vector");
        const GVector g = parse_int_list(fan_args[0]);
        const bool b = is_brick_gvector_n4(g);
        print.emit({{"gvector", g}, {"is_brick", b}}, yes_no(b));
      } else if (mode == "compatible") {
        if (fan_args.size() != 2) throw ParseError("fan compatible takes two g-vectors");
        const GVector a = parse_int_list(fan_args[0]);
        const GVector b = parse_int_list(fan_args[1]);
        const bool c = compatible(a, b);
        print.emit({{"gvectors", {a, b}}, {"euler", euler_form(a, b)}, {"compatible", c}},
                   yes_no(c));
      } else {
        if (!fan_args.empty()) throw ParseError("fan maxcompat takes --n and --box only");
        if (n < 2) throw ParseError("--n must be at least 2");
        const CliqueResult r = max_compatible_search(n, box);
        std::ostringstream human;
        human << r.size;
        for (const auto& g : r.witness) human << '\n' << show(g);
        print.emit({{"n", n},
                    {"box", box},
                    {"bricks", r.candidates},
                    {"max_clique", r.size},
                    {"witness", r.witness},
                    {"bound", n / 2}},
                   human.str());
      }
    };
  });

  std::string suite;
  auto* ver = sub("verify", "Run an acceptance suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  int verify_status = kExitOk;
  ver->callback([&] {
    action = [&] {
      const auto results = run_suite(suite, VerifyOptions{settings.seed});
      json j = json::array();
      std::ostringstream human;
      for (const auto& r : results) {
        if (!r.passed) verify_status = kExitDomain;
        j.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
        human << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ", "
              << std::fixed << std::setprecision(1) << r.seconds << "s): " << r.detail << '\n';
      }
      std::string text = human.str();
      if (!text.empty()) text.pop_back();
      print.emit(j, text);
    };
  });

  std::string output;
  RenderOptions ropts;
  auto* ren = sub("render", "SVG drawing of the Dyck path model");
  ren->add_option("gvector", csv)->required();
  ren->add_option("-o,--output", output, "Output file, - for standard output");
  ren->add_option("--width", ropts.width, "Target width in px");
  ren->add_option("--unit", ropts.unit, "Grid cell size in px");
  ren->add_option("--palette-seed", ropts.palette_seed, "Colour palette rotation");
  ren->callback([&] {
    action = [&] {
      const GVector g = parse_int_list(csv);
      const std::string svg = render_dyck(g, ropts);
      if (output.empty() || output == "-") {
        out << svg;
        return;
      }
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << svg)) throw ParseError("cannot write " + output);
      print.emit({{"output", output}, {"bytes", svg.size()}}, "wrote " + output);
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return verify_status;
}

}  // namespace pcw
