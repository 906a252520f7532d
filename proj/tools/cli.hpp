#pragma once

// Subcommand dispatcher for the polarauto command-line tool. Kept in a
// header so the tests can drive it in-process.

#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarauto/polarauto.hpp"

namespace polarauto::cli {

struct CommandOutcome {
  int exit_code = 0;
  std::string payload;      // JSON text, empty for help output
  std::string diagnostics;  // usage errors and help
};

namespace detail {

inline Json read_json_file(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  return Json::parse(in);
}

/// "rm(r,n)" and "rm-plus(r,n)" build presets, anything else is a code JSON file.
inline BinaryCode load_code(const std::string& spec) {
  static const std::regex preset(R"(^\s*(rm|rm-plus)\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(spec, m, preset)) {
    const int r = std::stoi(m[2]), n = std::stoi(m[3]);
    require(n >= 1 && n <= kMaxVars, "variable count out of range");
    return m[1] == "rm" ? rm_code(r, n) : rm_plus_code(r, n);
  }
  return code_from_json(read_json_file(spec));
}

inline std::set<std::uint32_t> parse_index_list(const std::string& text) {
  std::set<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    require(item.find_first_not_of("0123456789") == std::string::npos, "bad index: " + item);
    out.insert(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

inline std::string dump(const Json& j) { return j.dump(); }

}  // namespace detail

inline CommandOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Automorphism groups of monomial and polar codes"};
  app.name("polarauto");
  app.require_subcommand(1);

  CommandOutcome out;
  std::function<Json()> action;
  bool verify_mode = false;
  bool verify_pass = false;

  int n = 0, r = 0, m = 0, k = 0;
  unsigned jobs = 1;
  std::string kind, monomials_text, s_text, info_text, base_spec, code_spec, perm_text, images_path,
      gens_path, bits_text, theorem_text, monomial_text;
  std::vector<std::string> perm_list;
  std::size_t degree = 0;

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads")->envname("POLARAUTO_JOBS")->check(CLI::PositiveNumber);
  };

  // code
  auto* code = app.add_subcommand("code", "build and inspect codes");
  code->require_subcommand(1);
  auto* build = code->add_subcommand("build", "construct a code and print its JSON");
  build->add_option("--kind", kind, "rm|rm-plus|family3|monomials|info-set|lift")
      ->required()
      ->check(CLI::IsMember({"rm", "rm-plus", "family3", "monomials", "info-set", "lift"}));
  build->add_option("--n", n, "variable count");
  build->add_option("--r", r, "degree");
  build->add_option("--m", m, "family3 variable count");
  build->add_option("--k", k, "family3 split");
  build->add_option("--S", s_text, "family3 set S, e.g. x0x1");
  build->add_option("--monomials", monomials_text, "generating monomials, e.g. 1+x0+x1");
  build->add_option("--info", info_text, "information set rows, e.g. 3,4,5,6,7");
  build->add_option("--base", base_spec, "base code for lift (file or rm(r,m))");
  build->callback([&] {
    action = [&]() -> Json {
      if (kind == "rm") return code_to_json(rm_code(r, n));
      if (kind == "rm-plus") return code_to_json(rm_plus_code(r, n));
      if (kind == "family3") {
        auto res = family3_code(m, k, MonomialSet::parse(m, s_text));
        Json j = code_to_json(res.code);
        j["s_was_decreasing"] = res.s_was_decreasing;
        return j;
      }
      if (kind == "monomials") {
        require(n >= 1 && n <= kMaxVars, "--n out of range");
        return code_to_json(code_from_monomials(MonomialSet::parse(n, monomials_text)));
      }
      if (kind == "info-set")
        return code_to_json(code_from_information_set(PolarSpec(n, detail::parse_index_list(info_text))));
      require(!base_spec.empty(), "lift needs --base");
      return code_to_json(lift_code(detail::load_code(base_spec), n));
    };
  });

  auto* check_dec = code->add_subcommand("check-decreasing", "decreasing closure of a monomial set");
  check_dec->add_option("--n", n, "variable count")->required();
  check_dec->add_option("--monomials", monomials_text, "monomial set")->required();
  check_dec->callback([&] {
    action = [&]() -> Json {
      require(n >= 1 && n <= kMaxVars, "--n out of range");
      auto res = decreasing_closure(MonomialSet::parse(n, monomials_text));
      Json j;
      j["was_decreasing"] = res.was_decreasing;
      j["closure"] = anf_to_json(res.closure);
      return j;
    };
  });

  // mono
  auto* mono = app.add_subcommand("mono", "evaluation vectors and ANF");
  mono->require_subcommand(1);
  auto* eval = mono->add_subcommand("eval", "evaluation vector of a monomial or ANF");
  eval->add_option("--n", n, "variable count")->required();
  eval->add_option("--monomial", monomial_text, "monomial or sum of monomials")->required();
  eval->callback([&] {
    action = [&]() -> Json {
      require(n >= 1 && n <= kMaxVars, "--n out of range");
      return {{"bits", anf_to_eval(MonomialSet::parse(n, monomial_text)).to_string()}};
    };
  });
  auto* anf = mono->add_subcommand("anf", "ANF of an evaluation vector");
  anf->add_option("--bits", bits_text, "bit string, coordinate 1 first")->required();
  anf->callback([&] {
    action = [&]() -> Json {
      MonomialSet s = eval_to_anf(EvalVector::parse(bits_text));
      return {{"anf", anf_to_json(s)}, {"text", s.to_string()}};
    };
  });

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism tests, classification and search");
  aut->require_subcommand(1);
  auto add_code = [&](CLI::App* sub) {
    sub->add_option("--code", code_spec, "code JSON file, '-' for stdin, or rm(r,n) / rm-plus(r,n)")->required();
  };
  auto* test = aut->add_subcommand("test", "is the permutation an automorphism");
  add_code(test);
  test->add_option("--perm", perm_text, "cycle notation, 1-based")->required();
  test->callback([&] {
    action = [&]() -> Json {
      BinaryCode c = detail::load_code(code_spec);
      Permutation p = Permutation::parse_cycles(perm_text, c.length());
      auto bad = first_escaping_generator(c, p);
      Json j;
      j["automorphism"] = !bad.has_value();
      j["escaping_generator"] = bad ? Json(*bad) : Json(nullptr);
      return j;
    };
  });
  auto* cls = aut->add_subcommand("classify", "affine, non_affine or not_automorphism");
  add_code(cls);
  cls->add_option("--perm", perm_text, "cycle notation, 1-based")->required();
  cls->callback([&] {
    action = [&]() -> Json {
      BinaryCode c = detail::load_code(code_spec);
      return classification_to_json(classify(c, Permutation::parse_cycles(perm_text, c.length())));
    };
  });
  auto* from_images = aut->add_subcommand("from-images", "permutation realizing variable images");
  from_images->add_option("--n", n, "variable count");
  from_images->add_option("--images", images_path, "images JSON file")->required();
  from_images->callback([&] {
    action = [&]() -> Json {
      int file_n = 0;
      auto images = images_from_json(detail::read_json_file(images_path), &file_n);
      require(n == 0 || n == file_n, "--n does not match the images file");
      return {{"permutation", permutation_from_images(file_n, images).to_cycles()}};
    };
  });
  auto* affine_enum = aut->add_subcommand("affine-enum", "count affine automorphisms");
  add_code(affine_enum);
  add_jobs(affine_enum);
  affine_enum->callback([&] {
    action = [&]() -> Json {
      BinaryCode c = detail::load_code(code_spec);
      auto res = enumerate_affine_automorphisms(c, jobs);
      Json j;
      j["count"] = res.count.str();
      Json gens = Json::array();
      for (const auto& g : res.generators) gens.push_back(g.to_cycles());
      j["generators"] = std::move(gens);
      return j;
    };
  });
  auto* exhaustive = aut->add_subcommand("exhaustive", "full group by exhaustive search (length <= 8)");
  add_code(exhaustive);
  add_jobs(exhaustive);
  exhaustive->callback([&] {
    action = [&]() -> Json { return search_result_to_json(exhaustive_group(detail::load_code(code_spec), jobs)); };
  });
  auto* backtrack = aut->add_subcommand("backtrack", "full group by backtracking (length <= 16)");
  add_code(backtrack);
  backtrack->callback([&] {
    action = [&]() -> Json { return search_result_to_json(backtrack_group(detail::load_code(code_spec))); };
  });

  // group
  auto* group = app.add_subcommand("group", "permutation groups");
  group->require_subcommand(1);
  auto* order = group->add_subcommand("order", "order and base of a generated group");
  order->add_option("--gens", gens_path, "generator-list JSON file");
  order->add_option("--perm", perm_list, "generator in cycle notation (repeatable)");
  order->add_option("--degree", degree, "degree for --perm");
  order->callback([&] {
    action = [&]() -> Json {
      std::vector<Permutation> gens;
      if (!gens_path.empty()) {
        gens = permutations_from_json(detail::read_json_file(gens_path), &degree);
      } else {
        require(degree >= 1, "--perm needs --degree");
        for (const auto& t : perm_list) gens.push_back(Permutation::parse_cycles(t, degree));
      }
      require(degree >= 1, "group needs a positive degree");
      auto chain = StabilizerChain::build(gens, degree);
      Json j;
      j["degree"] = degree;
      j["order"] = chain.order().str();
      Json base = Json::array();
      for (auto b : chain.base()) base.push_back(b + 1);
      j["base"] = std::move(base);
      j["orbit_sizes"] = chain.orbit_sizes();
      return j;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "check a predicted automorphism group");
  ver->add_option("--theorem", theorem_text, "thm31|cor35|thm36|thm41|sec4r1|remark43")
      ->required()
      ->check(CLI::IsMember({"thm31", "cor35", "thm36", "thm41", "sec4r1", "remark43"}));
  ver->add_option("--n", n, "variable count");
  ver->add_option("--m", m, "thm36 variable count");
  ver->add_option("--k", k, "thm36 split");
  ver->add_option("--r", r, "thm41 degree");
  ver->add_option("--S", s_text, "thm36 set S");
  ver->add_option("--base", base_spec, "thm31/cor35 base code (file or rm(r,m))");
  add_jobs(ver);
  ver->callback([&] {
    verify_mode = true;
    action = [&]() -> Json {
      TheoremParams p;
      p.theorem = parse_theorem(theorem_text);
      p.n = n;
      p.m = m;
      p.k = k;
      p.r = r;
      if (!base_spec.empty()) p.base = detail::load_code(base_spec);
      if (!s_text.empty()) {
        require(m >= 1 && m <= kMaxVars, "--S needs --m");
        p.s = MonomialSet::parse(m, s_text);
      }
      VerificationReport rep = verify(p, jobs);
      verify_pass = rep.pass;
      return report_to_json(rep);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream diag, help;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.diagnostics = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.diagnostics = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    out.diagnostics = std::string(e.what()) + "\n";
    return out;
  }
  if (!action) {
    out.exit_code = 2;
    out.diagnostics = "no command given\n";
    return out;
  }
  try {
    Json payload = action();
    out.payload = detail::dump(payload);
    out.exit_code = verify_mode && !verify_pass ? 1 : 0;
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.payload = detail::dump(Json{{"error", e.what()}});
  }
  return out;
}

}  // namespace polarauto::cli
