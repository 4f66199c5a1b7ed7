// Command-line front end: decides band-brickness, semibricks and
// brick-infiniteness for string algebras with acyclic quivers, exposes the
// traced-poset machinery (JSON/DOT), the trisection, and the word-level
// predicates (Burrows-Wheeler transform, perfectly clustering and weakly
// perfectly clustering words).
//
// Band tokens are written leftmost = last syllable, e.g. the running
// triangle-algebra band is  "b e c d^-1 e a^-1".
//
// Exit status: 0 = decided, 1 = predicate false (boolean subcommands under
// --strict), 2 = input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bandbrick/correspondence.hpp"
#include "bandbrick/words.hpp"

using namespace bandbrick;
using nlohmann::json;

namespace {

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::vector<int> parse_word(const std::string& alphabet, const std::string& letters) {
  std::vector<std::string> order;
  std::string tok;
  std::istringstream a(alphabet);
  while (std::getline(a, tok, '<')) {
    if (tok.empty()) throw error("malformed --alphabet value");
    order.push_back(tok);
  }
  if (order.size() < 1) throw error("empty alphabet");
  std::vector<int> w;
  std::istringstream ls(letters);
  while (ls >> tok) {
    auto it = std::find(order.begin(), order.end(), tok);
    if (it == order.end()) throw error("letter '" + tok + "' is not in the alphabet");
    w.push_back((int)(it - order.begin()) + 1);
  }
  if (w.empty()) throw error("empty word");
  return w;
}

std::string render_word(const std::string& alphabet, const std::vector<int>& w) {
  std::vector<std::string> order;
  std::string tok;
  std::istringstream a(alphabet);
  while (std::getline(a, tok, '<')) order.push_back(tok);
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += order[x - 1];
  }
  return out;
}

struct Options {
  bool as_json = false;
  bool strict = false;
};

int verdict(const Options& opt, bool value) { return opt.strict && !value ? 1 : 0; }

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band-brick decisions for string algebras with acyclic quivers"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
  app.add_flag("--strict", opt.strict,
               "exit 1 when a boolean result is false (0 otherwise)");

  std::string pres_path, band_tokens, from_tokens, to_tokens, format = "text";
  std::string alphabet, letters, poset_path;
  std::vector<std::string> band_list, lambda_list;
  std::vector<int> l_list;
  int max_len = 0, mult = 1, bound = 0;

  auto* c_validate = app.add_subcommand("validate", "string-algebra axioms report");
  c_validate->add_option("presentation", pres_path)->required();

  auto* c_signs = app.add_subcommand("signs", "solve (or echo) the sign maps");
  c_signs->add_option("presentation", pres_path)->required();

  auto* c_bands = app.add_subcommand("bands", "enumerate bands up to a length");
  c_bands->add_option("presentation", pres_path)->required();
  c_bands->add_option("--max-len", max_len, "maximum band length")->required();

  auto* c_isbrick = app.add_subcommand("is-brick", "wpc-pair brick decision");
  c_isbrick->add_option("presentation", pres_path)->required();
  c_isbrick->add_option("--band", band_tokens)->required();
  c_isbrick->add_option("--l", mult, "multiplicity of the band module");

  auto* c_oracle =
      app.add_subcommand("oracle-is-brick", "morphism-oracle brick decision");
  c_oracle->add_option("presentation", pres_path)->required();
  c_oracle->add_option("--band", band_tokens)->required();
  c_oracle->add_option("--l", mult, "multiplicity of the band module");
  c_oracle->add_option("--bound", bound, "audit search-length override");

  auto* c_homdim = app.add_subcommand("hom-dim", "hom dimension between band modules");
  c_homdim->add_option("presentation", pres_path)->required();
  c_homdim->add_option("--from", from_tokens)->required();
  c_homdim->add_option("--to", to_tokens)->required();

  auto* c_crown = app.add_subcommand("crown", "crown of a band over the traced poset");
  c_crown->add_option("presentation", pres_path)->required();
  c_crown->add_option("--band", band_tokens)->required();

  auto* c_poset = app.add_subcommand("poset", "traced poset of the presentation");
  c_poset->add_option("presentation", pres_path)->required();
  c_poset->add_option("--format", format, "json (default) or dot");

  auto* c_cq = app.add_subcommand("covering-quiver", "covering quiver as DOT");
  c_cq->add_option("presentation", pres_path)->required();
  c_cq->add_option("--format", format, "dot");

  auto* c_recover =
      app.add_subcommand("recover", "rebuild a presentation from a poset JSON file");
  c_recover->add_option("poset", poset_path)->required();

  auto* c_binf = app.add_subcommand("brick-infinite", "brick-infiniteness decision");
  c_binf->add_option("presentation", pres_path)->required();

  auto* c_semi = app.add_subcommand("semibrick", "band semibrick decision");
  c_semi->add_option("presentation", pres_path)->required();
  c_semi->add_option("--band", band_list, "summand band (repeatable)")->required();
  c_semi->add_option("--l", l_list, "multiplicities, one per band");
  c_semi->add_option("--lambda", lambda_list, "scalar tags, one per band");

  auto* c_tri = app.add_subcommand("trisect", "trisection of the presentation");
  c_tri->add_option("presentation", pres_path)->required();

  auto* c_word = app.add_subcommand("word", "word predicates over a linear alphabet");
  c_word->require_subcommand(1);
  auto add_word_sub = [&](const char* name, const char* desc) {
    auto* s = c_word->add_subcommand(name, desc);
    s->add_option("--alphabet", alphabet, "letters in increasing order, e.g. 1<2<3")
        ->required();
    s->add_option("letters", letters, "whitespace-separated word")->required();
    return s;
  };
  auto* w_bw = add_word_sub("bw", "Burrows-Wheeler transform");
  auto* w_pcw = add_word_sub("is-pcw", "perfectly clustering word test");
  auto* w_wpc = add_word_sub("is-wpc", "weakly perfectly clustering crown test");

  // let --json / --strict appear after the subcommand
  for (CLI::App* s : {c_validate, c_signs, c_bands, c_isbrick, c_oracle, c_homdim,
                      c_crown, c_poset, c_cq, c_recover, c_binf, c_semi, c_tri, c_word,
                      w_bw, w_pcw, w_wpc})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_validate) {
      auto p = load_presentation_file(pres_path);
      auto rep = validate(p);
      json j = {{"schema", 1},
                {"string_algebra", rep.is_string_algebra},
                {"gentle", rep.is_gentle},
                {"acyclic", rep.is_acyclic}};
      auto viol = json::array();
      std::string vtext;
      for (const auto& [a, w] : rep.violations) {
        viol.push_back({{"axiom", a}, {"witness", w}});
        vtext += "  [" + a + "] " + w + "\n";
      }
      j["violations"] = viol;
      emit(opt, j,
           std::string("string algebra: ") + (rep.is_string_algebra ? "true" : "false") +
               "\ngentle: " + (rep.is_gentle ? "true" : "false") +
               "\nacyclic: " + (rep.is_acyclic ? "true" : "false") + "\n" + vtext);
      return verdict(opt, rep.is_string_algebra);
    }

    if (*c_signs) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      json arr = json::array();
      for (int a = 0; a < (int)p.quiver.arrows.size(); ++a)
        arr.push_back({{"arrow", p.quiver.arrows[a].name},
                       {"sigma", p.sigma(a)},
                       {"eps", p.eps(a)}});
      emit(opt, json{{"schema", 1}, {"signs", arr}}, serialize_presentation(p));
      return 0;
    }

    if (*c_bands) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto bands = enumerate_bands(p, max_len);
      json arr = json::array();
      std::string text;
      for (const auto& b : bands) {
        arr.push_back({{"length", b.length()}, {"tokens", print_string(p, b.str)}});
        text += std::to_string(b.length()) + "  " + print_string(p, b.str) + "\n";
      }
      emit(opt, json{{"schema", 1}, {"bands", arr}},
           text + std::to_string(bands.size()) + " band(s)\n");
      return 0;
    }

    if (*c_isbrick) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto b = make_band(p, parse_string_tokens(p, band_tokens));
      bool res = is_brick(p, b, mult);
      emit(opt,
           json{{"schema", 1}, {"band", band_tokens}, {"l", mult}, {"brick", res}},
           std::string("brick: ") + (res ? "true" : "false") + "\n");
      return verdict(opt, res);
    }

    if (*c_oracle) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto b = make_band(p, parse_string_tokens(p, band_tokens));
      bool res = oracle_is_brick(p, b, mult, bound);
      emit(opt,
           json{{"schema", 1}, {"band", band_tokens}, {"l", mult}, {"brick", res}},
           std::string("brick: ") + (res ? "true" : "false") + "\n");
      return verdict(opt, res);
    }

    if (*c_homdim) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto b1 = make_band(p, parse_string_tokens(p, from_tokens));
      auto b2 = make_band(p, parse_string_tokens(p, to_tokens));
      int d = hom_dimension(p, b1, b2);
      emit(opt, json{{"schema", 1}, {"dim", d}},
           "hom dimension: " + std::to_string(d) + "\n");
      return 0;
    }

    if (*c_crown) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto t = build_traced_poset(p);
      auto b = make_band(p, parse_string_tokens(p, band_tokens));
      auto w = w_ba(p, b);
      json arr = json::array();
      std::string text;
      for (int x : w.letters) {
        arr.push_back(t.elems[x]);
        if (!text.empty()) text += ' ';
        text += t.elems[x];
      }
      emit(opt,
           json{{"schema", 1},
                {"crown", arr},
                {"valid", crown_is_valid(t, w)},
                {"special", crown_is_special(t, w)}},
           text + "\n");
      return 0;
    }

    if (*c_poset) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto t = build_traced_poset(p);
      if (format == "dot")
        std::cout << hasse_dot(t);
      else
        std::cout << traced_poset_to_json(t).dump(2) << "\n";
      return 0;
    }

    if (*c_cq) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      std::cout << covering_quiver_dot(covering_quiver(p));
      return 0;
    }

    if (*c_recover) {
      std::ifstream in(poset_path);
      if (!in) throw error("cannot open poset file " + poset_path);
      json j = json::parse(in);
      auto t = traced_poset_from_json(j);
      auto p = recover_presentation(t);
      std::cout << serialize_presentation(p);
      return 0;
    }

    if (*c_binf) {
      auto p = load_presentation_file(pres_path);
      auto [inf, wit] = is_brick_infinite(p);
      auto signed_p = ensure_signs(p);
      json j = {{"schema", 1}, {"brick_infinite", inf}};
      std::string text = std::string("brick-infinite: ") + (inf ? "true" : "false") + "\n";
      if (wit) {
        j["witness"] = print_string(signed_p, wit->str);
        text += "witness: " + print_string(signed_p, wit->str) + "\n";
      }
      emit(opt, j, text);
      return verdict(opt, inf);
    }

    if (*c_semi) {
      auto p = ensure_signs(load_presentation_file(pres_path));
      auto t = build_traced_poset(p);
      if (!l_list.empty() && l_list.size() != band_list.size())
        throw error("--l must be given once per --band");
      if (!lambda_list.empty() && lambda_list.size() != band_list.size())
        throw error("--lambda must be given once per --band");
      std::vector<BandModuleSpec> specs;
      for (size_t i = 0; i < band_list.size(); ++i) {
        BandModuleSpec s;
        s.band = make_band(p, parse_string_tokens(p, band_list[i]));
        s.l = l_list.empty() ? 1 : l_list[i];
        s.lambda = lambda_list.empty() ? "l" : lambda_list[i];
        specs.push_back(std::move(s));
      }
      bool res = is_semibrick(p, t, specs);
      emit(opt, json{{"schema", 1}, {"semibrick", res}},
           std::string("semibrick: ") + (res ? "true" : "false") + "\n");
      return verdict(opt, res);
    }

    if (*c_tri) {
      auto p = load_presentation_file(pres_path);
      auto tri = trisect(p);
      if (opt.as_json)
        std::cout << json{{"schema", 1}, {"presentation", serialize_presentation(tri)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << serialize_presentation(tri);
      return 0;
    }

    if (*w_bw) {
      auto w = parse_word(alphabet, letters);
      auto b = bw_transform(w);
      emit(opt, json{{"schema", 1}, {"bw", render_word(alphabet, b)}},
           render_word(alphabet, b) + "\n");
      return 0;
    }
    if (*w_pcw) {
      auto w = parse_word(alphabet, letters);
      bool res = is_pcw(w);
      emit(opt, json{{"schema", 1}, {"pcw", res}},
           std::string("pcw: ") + (res ? "true" : "false") + "\n");
      return verdict(opt, res);
    }
    if (*w_wpc) {
      auto w = parse_word(alphabet, letters);
      bool res = is_wpc_crown(w);
      emit(opt, json{{"schema", 1}, {"wpc", res}},
           std::string("wpc: ") + (res ? "true" : "false") + "\n");
      return verdict(opt, res);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
