#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "mundici/errors.hpp"
#include "mundici/functors.hpp"
#include "mundici/good_sequence.hpp"
#include "mundici/json_io.hpp"
#include "mundici/logic.hpp"
#include "mundici/sheaf.hpp"
#include "mundici/zoo.hpp"

namespace {

using namespace mundici;

struct Common {
  long long budget = 200;
  std::uint64_t seed = 0;
  bool json = false;
  int max_len = 3;

  CheckOptions options() const { return CheckOptions{budget, seed, max_len}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "samples per randomized check")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--max-len", c.max_len, "good-sequence enumeration bound")
      ->check(CLI::PositiveNumber);
}

int emit(const std::vector<Report>& reports, const std::string& command, const Common& c) {
  if (c.json) {
    std::cout << reports_json(reports, command) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.text() << "\n";
  }
  return all_pass(reports) ? 0 : 1;
}

Model load_model(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Model::of(mv_algebra_from_json(text));
  } catch (const Error&) {
    return Model::of(l_group_from_json(text));
  }
}

std::vector<std::string> gather_lines(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

int emit_iso(const IsoWitness& iso, const Common& c) {
  if (c.json) {
    nlohmann::json w = nullptr;
    if (iso.report.witness)
      w = {{"law", iso.report.witness->law}, {"detail", iso.report.witness->detail}};
    const nlohmann::json obj{{"iso", iso.report.pass()}, {"checked", iso.report.checked},
                             {"witness", w}};
    std::cout << obj.dump() << "\n";
  } else {
    std::cout << iso.description << "\n" << iso.report.text() << "\n";
  }
  return iso.report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checks for the unit-interval / lattice-group correspondence"};
  app.require_subcommand(1);

  Common c_mv, c_lu, c_gamma, c_lf, c_rt, c_seq, c_int, c_snd, c_srt, c_snat, c_zoo;
  std::vector<std::string> mv_files, lu_files, seq_texts, int_texts, snd_texts;
  std::string gamma_file, lf_file, rt_algebra, rt_group, seq_model, snd_group, srt_file, snat_file;

  CLI::App* mv = app.add_subcommand("mv-axioms", "check the MV axioms (files or built-ins)");
  mv->add_option("files", mv_files, "carrier description files");
  add_common(mv, c_mv);

  CLI::App* lu = app.add_subcommand("lu-axioms", "check the group axioms (files or built-ins)");
  lu->add_option("files", lu_files, "carrier description files");
  add_common(lu, c_lu);

  CLI::App* ga = app.add_subcommand("gamma", "unit interval of a group");
  ga->add_option("file", gamma_file, "group description file")->required();
  add_common(ga, c_gamma);

  CLI::App* lf = app.add_subcommand("lfunctor", "difference group of an MV-algebra");
  lf->add_option("file", lf_file, "MV carrier description file")->required();
  add_common(lf, c_lf);

  CLI::App* rt = app.add_subcommand("roundtrip", "verify an isomorphism roundtrip");
  rt->add_option("--algebra", rt_algebra, "MV carrier file: verify phi");
  rt->add_option("--group", rt_group, "group file: verify psi");
  add_common(rt, c_rt);

  CLI::App* sq = app.add_subcommand("sequent", "check sequents against a model");
  sq->add_option("--model", seq_model, "carrier description file")->required();
  sq->add_option("sequents", seq_texts, "sequent text (stdin lines when omitted)");
  add_common(sq, c_seq);

  CLI::App* in = app.add_subcommand("interpret", "translate MV sequents to guarded group sequents");
  in->add_option("sequents", int_texts, "sequent text (stdin lines when omitted)");
  add_common(in, c_int);

  CLI::App* sn = app.add_subcommand("soundness", "interval/group agreement for MV sequents");
  sn->add_option("--group", snd_group, "group description file (built-ins when omitted)");
  sn->add_option("sequents", snd_texts, "sequent text (MV axioms when omitted)");
  add_common(sn, c_snd);

  CLI::App* sr = app.add_subcommand("sheaf-roundtrip", "stalkwise roundtrips over a sheaf");
  sr->add_option("file", srt_file, "sheaf description file (built-ins when omitted)");
  add_common(sr, c_srt);

  CLI::App* na = app.add_subcommand("sheaf-naturality", "pullback compatibility of the functors");
  na->add_option("file", snat_file, "sheaf description file (built-in cases when omitted)");
  add_common(na, c_snat);

  CLI::App* zo = app.add_subcommand("zoo", "run every check over the built-in structures");
  add_common(zo, c_zoo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mv->parsed()) {
      std::vector<Report> reports;
      if (mv_files.empty()) {
        for (const auto& e : zoo_algebras())
          reports.push_back(check_mv_axioms(e.model.mv, c_mv.options()));
      } else {
        for (const auto& f : mv_files)
          reports.push_back(check_mv_axioms(mv_algebra_from_json(read_file(f)), c_mv.options()));
      }
      return emit(reports, "mv-axioms", c_mv);
    }

    if (lu->parsed()) {
      std::vector<Report> reports;
      if (lu_files.empty()) {
        for (const auto& e : zoo_groups())
          reports.push_back(check_lu_axioms(e.model.lu, c_lu.options()));
      } else {
        for (const auto& f : lu_files)
          reports.push_back(check_lu_axioms(l_group_from_json(read_file(f)), c_lu.options()));
      }
      return emit(reports, "lu-axioms", c_lu);
    }

    if (ga->parsed()) {
      const LPtr g = l_group_from_json(read_file(gamma_file));
      const MvPtr a = gamma(g);
      if (!c_gamma.json) {
        std::cout << "gamma(" << g->name() << ") = " << a->name();
        if (a->finite()) std::cout << " with " << a->elements().size() << " elements";
        std::cout << "\n";
      }
      return emit({check_mv_axioms(a, c_gamma.options())}, "gamma", c_gamma);
    }

    if (lf->parsed()) {
      const MvPtr a = mv_algebra_from_json(read_file(lf_file));
      const LPtr g = l_group(a);
      if (!c_lf.json) std::cout << "l_group(" << a->name() << ") = " << g->name() << "\n";
      return emit({check_lu_axioms(g, c_lf.options())}, "lfunctor", c_lf);
    }

    if (rt->parsed()) {
      if (rt_algebra.empty() == rt_group.empty()) {
        std::cerr << "roundtrip needs exactly one of --algebra or --group\n";
        return 2;
      }
      if (!rt_algebra.empty())
        return emit_iso(phi(mv_algebra_from_json(read_file(rt_algebra)), c_rt.options()), c_rt);
      return emit_iso(psi(l_group_from_json(read_file(rt_group)), c_rt.options()), c_rt);
    }

    if (sq->parsed()) {
      const Model m = load_model(seq_model);
      std::vector<Report> reports;
      for (const auto& text : gather_lines(seq_texts))
        reports.push_back(check_sequent(m, parse_sequent(text), c_seq.options()));
      return emit(reports, "sequent", c_seq);
    }

    if (in->parsed()) {
      const auto lines = gather_lines(int_texts);
      if (c_int.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& text : lines) {
          const Sequent s = parse_sequent(text);
          arr.push_back({{"input", to_string(s)}, {"output", to_string(guard(interpret(s)))}});
        }
        std::cout << nlohmann::json{{"command", "interpret"}, {"pass", true},
                                    {"translations", arr}}
                         .dump()
                  << "\n";
      } else {
        for (const auto& text : lines) std::cout << to_string(guard(interpret(parse_sequent(text)))) << "\n";
      }
      return 0;
    }

    if (sn->parsed()) {
      std::vector<std::pair<std::string, LPtr>> targets;
      if (snd_group.empty()) {
        for (const auto& e : zoo_groups()) targets.push_back({e.key, e.model.lu});
      } else {
        targets.push_back({snd_group, l_group_from_json(read_file(snd_group))});
      }
      std::vector<Sequent> sequents;
      if (snd_texts.empty()) {
        sequents = mv_axiom_sequents();
      } else {
        for (const auto& t : snd_texts) sequents.push_back(parse_sequent(t));
      }
      std::vector<Report> reports;
      for (const auto& [key, g] : targets)
        for (const auto& s : sequents)
          reports.push_back(check_interpretation_soundness(g, s, c_snd.options()));
      return emit(reports, "soundness", c_snd);
    }

    if (sr->parsed()) {
      std::vector<Report> reports;
      if (srt_file.empty()) {
        for (const MvSheaf& f : {zoo_mv_sheaf_sierpinski(), zoo_mv_sheaf_chain3()}) {
          reports.push_back(validate_sheaf(f, c_srt.options()));
          reports.push_back(check_sheaf_roundtrip(f, c_srt.options()));
        }
        for (const LSheaf& f : {zoo_l_sheaf_sierpinski(), zoo_l_sheaf_chain3()}) {
          reports.push_back(validate_sheaf(f, c_srt.options()));
          reports.push_back(check_sheaf_roundtrip(f, c_srt.options()));
        }
      } else {
        const SheafFile file = sheaf_from_json(read_file(srt_file));
        if (file.is_mv) {
          reports.push_back(validate_sheaf(file.mv, c_srt.options()));
          reports.push_back(check_sheaf_roundtrip(file.mv, c_srt.options()));
        } else {
          reports.push_back(validate_sheaf(file.lu, c_srt.options()));
          reports.push_back(check_sheaf_roundtrip(file.lu, c_srt.options()));
        }
      }
      return emit(reports, "sheaf-roundtrip", c_srt);
    }

    if (na->parsed()) {
      std::vector<Report> reports;
      if (snat_file.empty()) {
        const MvSheaf ms = zoo_mv_sheaf_sierpinski();
        const LSheaf ls = zoo_l_sheaf_sierpinski();
        reports.push_back(
            check_sheaf_naturality(ContinuousMap::identity(ms.space), ms, c_snat.options()));
        reports.push_back(check_sheaf_naturality(
            ContinuousMap::constant(FiniteSpace::point(), ms.space, 1), ms, c_snat.options()));
        reports.push_back(
            check_sheaf_naturality(ContinuousMap::identity(ls.space), ls, c_snat.options()));
        reports.push_back(check_sheaf_naturality(
            ContinuousMap::constant(FiniteSpace::point(), ls.space, 1), ls, c_snat.options()));
      } else {
        const SheafFile file = sheaf_from_json(read_file(snat_file));
        const SpacePtr space = file.is_mv ? file.mv.space : file.lu.space;
        const ContinuousMap id = ContinuousMap::identity(space);
        const ContinuousMap to_point = ContinuousMap::constant(FiniteSpace::point(), space, 0);
        if (file.is_mv) {
          reports.push_back(check_sheaf_naturality(id, file.mv, c_snat.options()));
          reports.push_back(check_sheaf_naturality(to_point, file.mv, c_snat.options()));
        } else {
          reports.push_back(check_sheaf_naturality(id, file.lu, c_snat.options()));
          reports.push_back(check_sheaf_naturality(to_point, file.lu, c_snat.options()));
        }
      }
      return emit(reports, "sheaf-naturality", c_snat);
    }

    if (zo->parsed()) return emit(run_zoo(c_zoo.options()), "zoo", c_zoo);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::BadInput:
      case Errc::UnboundVariable:
      case Errc::SignatureMismatch:
      case Errc::NotOpen:
      case Errc::NotContinuous: return 2;
      default: return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
