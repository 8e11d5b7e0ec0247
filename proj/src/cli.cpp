#include "quadnorm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "quadnorm/catalog.hpp"
#include "quadnorm/classifier.hpp"
#include "quadnorm/factorability.hpp"
#include "quadnorm/monoid_model.hpp"
#include "quadnorm/qmap_format.hpp"
#include "quadnorm/rewriting.hpp"
#include "quadnorm/search.hpp"

namespace quadnorm {

  namespace {

    // Raised for unreadable or malformed input; maps to exit code 2.
    struct InputError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Input {
      QuadMap                     map;
      std::optional<MonoidOracle> oracle;
    };

    Input load_input(std::string const& path) {
      constexpr std::string_view prefix = "catalog:";
      if (path.starts_with(prefix)) {
        try {
          auto entry = load(path.substr(prefix.size()));
          return {entry.map, entry.oracle};
        } catch (std::invalid_argument const& e) {
          throw InputError(e.what());
        }
      }
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot read " + path);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        return {parse_qmap(buf.str()), std::nullopt};
      } catch (ParseError const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    Word parse_word(QuadMap const& F, std::string const& text) {
      try {
        return Word::parse(F.alphabet(), text);
      } catch (std::invalid_argument const& e) {
        throw InputError(e.what());
      }
    }

    int emit_checks(std::vector<CheckReport> const& reports, std::ostream& out) {
      bool ok = true;
      for (auto const& r : reports) {
        out << format_check_line(r) << "\n";
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_class(std::string const& file, std::ostream& out) {
      auto in  = load_input(file);
      auto cls = minimal_class(in.map);
      out << "CLASS left=" << format_class_value(cls.left)
          << " right=" << format_class_value(cls.right) << "\n";
      if (cls.left_witness) {
        out << "WITNESS left=" << cls.left_witness->to_string() << "\n";
      }
      if (cls.right_witness) {
        out << "WITNESS right=" << cls.right_witness->to_string() << "\n";
      }
      if (cls.orbit_cycle) {
        out << "ORBIT-CYCLE " << cls.orbit_cycle->to_string() << "\n";
      }
      return 0;
    }

    int cmd_normalize(std::string const& file,
                      std::string const& word,
                      std::string const& strategy,
                      bool               trace,
                      std::ostream&      out) {
      auto in = load_input(file);
      auto s  = parse_strategy(strategy);
      if (!s) {
        throw InputError("unknown strategy '" + strategy + "'");
      }
      auto r = normalize(in.map, parse_word(in.map, word), *s);
      out << r.word.to_string() << "\n";
      if (trace) {
        out << "TRACE " << r.positions.to_string() << "\n";
      }
      if (!r.normalised()) {
        out << "OUTCOME " << (r.outcome == NormalizeOutcome::cycle ? "cycle" : "budget_exhausted")
            << "\n";
        return 1;
      }
      return 0;
    }

    struct CheckFlags {
      bool idempotent = false, neutral = false, domino = false, weak_domino = false,
           local = false, stable212 = false, all = false;
    };

    int cmd_check(std::string const& file, CheckFlags f, std::ostream& out) {
      auto in = load_input(file);
      auto const& F = in.map;
      bool none = !(f.idempotent || f.neutral || f.domino || f.weak_domino || f.local
                    || f.stable212);
      if (f.all || none) {
        bool e = F.alphabet()->has_neutral();
        f      = {true, e, true, e, e, true, true};
        if (!e) {
          out << "# neutral, weak-domino and local-factorability skipped: no neutral letter\n";
        }
      }
      std::vector<CheckReport> reports;
      if (f.idempotent) {
        reports.push_back(check_idempotent(F));
      }
      if (f.neutral) {
        reports.push_back(check_neutral(F));
      }
      if (f.domino) {
        reports.push_back(check_domino(F));
      }
      if (f.weak_domino) {
        reports.push_back(check_weak_domino(F));
      }
      std::optional<FactorabilityReport> lf;
      if (f.local) {
        lf = check_local_factorability(F, in.oracle ? &*in.oracle : nullptr);
        CheckReport overall = CheckReport::pass("local-factorability");
        for (auto const& r : lf->all()) {
          if (!r.passed) {
            overall = CheckReport::fail("local-factorability", *r.witness, r.name);
            break;
          }
        }
        reports.push_back(overall);
      }
      if (f.stable212) {
        reports.push_back(check_stable212(F));
      }
      int code = 0;
      for (auto const& r : reports) {
        out << format_check_line(r) << "\n";
        if (r.name == "local-factorability" && lf) {
          for (auto const& a : lf->all()) {
            out << format_check_line(a) << "\n";
          }
        }
        if (!r.passed) {
          code = 1;
        }
      }
      return code;
    }

    DeriveMode rules_mode(QuadMap const& F) {
      return F.alphabet()->has_neutral() ? DeriveMode::mod_e : DeriveMode::plain;
    }

    int cmd_rules(std::string const& file, bool mod_e, std::ostream& out) {
      auto in = load_input(file);
      auto R  = derive_rules(in.map, mod_e ? DeriveMode::mod_e : DeriveMode::plain);
      for (auto const& r : R.rules()) {
        out << format_rule(r) << "\n";
      }
      return 0;
    }

    int cmd_rewrite(std::string const& file,
                    std::string const& word,
                    std::string const& strategy,
                    std::size_t        budget,
                    bool               trace,
                    std::ostream&      out) {
      auto in = load_input(file);
      auto s  = parse_rewrite_strategy(strategy);
      if (!s) {
        throw InputError("unknown strategy '" + strategy + "'");
      }
      auto R = derive_rules(in.map, rules_mode(in.map));
      auto t = rewrite_trace(R, parse_word(in.map, word), *s, budget);
      if (trace) {
        out << format_trace(t);
      }
      out << "FINAL " << t.final.to_string() << " steps=" << t.length()
          << " outcome=" << to_string(t.outcome) << "\n";
      return t.outcome == TraceOutcome::irreducible ? 0 : 1;
    }

    struct MonoidFlags {
      std::size_t max_len      = 3;
      bool        stronger     = false;
      bool        left_weighted = false;
      bool        greedy       = false;
      bool        elements     = false;
    };

    int cmd_monoid(std::string const& file, MonoidFlags const& f, std::ostream& out) {
      auto        in = load_input(file);
      MonoidModel M(in.map);
      auto        elements = M.enumerate_elements(f.max_len);
      out << "ELEMENTS count=" << elements.size() << " max-len=" << f.max_len
          << " route=" << to_string(M.route()) << "\n";
      if (f.elements) {
        for (auto const& e : elements) {
          out << "ELEMENT " << e.canonical.to_string() << "\n";
        }
      }
      std::vector<CheckReport> reports;
      if (f.stronger) {
        reports.push_back(check_stronger_assumption(M, f.max_len));
      }
      if (f.left_weighted) {
        reports.push_back(check_left_weighted(M, f.max_len));
      }
      if (f.greedy) {
        reports.push_back(check_greedy(M, f.max_len));
      }
      return emit_checks(reports, out);
    }

    int cmd_catalog(std::string const& name, bool run, bool list, std::ostream& out) {
      if (list) {
        for (auto const& n : catalog_names()) {
          out << n << "  " << load(n).description << "\n";
        }
        return 0;
      }
      if (name.empty()) {
        throw InputError("catalog needs an entry name or --list");
      }
      CatalogEntry entry;
      try {
        entry = load(name);
      } catch (std::invalid_argument const& e) {
        throw InputError(e.what());
      }
      if (!run) {
        out << "# " << entry.name << ": " << entry.description << "\n" << to_qmap(entry.map);
        return 0;
      }
      return emit_checks(run_all(entry), out);
    }

    int cmd_search(SearchOptions opts, std::ostream& out) {
      SearchResult r;
      try {
        r = search(opts);
      } catch (std::invalid_argument const& e) {
        throw InputError(e.what());
      }
      out << "SEARCH mode=" << (r.exhaustive ? "exhaustive" : "random")
          << " letters=" << opts.letters << " candidates=" << r.candidates
          << " matches=" << r.hits.size() << "\n";
      for (auto const& h : r.hits) {
        auto const& c = h.classification;
        out << "CANDIDATE " << h.index << " class=(" << format_class_value(c.cls.left) << ","
            << format_class_value(c.cls.right) << ")";
        for (auto const& [name, ok] : c.properties) {
          out << " " << name << "=" << (ok ? "PASS" : "FAIL");
        }
        out << "\n";
        std::istringstream lines(to_qmap(h.map));
        std::string        line;
        while (std::getline(lines, line)) {
          out << "  " << line << "\n";
        }
      }
      return 0;
    }

  }  // namespace

  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic normalisation and factorability toolkit", "quadnorm"};
    app.require_subcommand(1);

    std::string file, word, strategy, name;
    bool        trace = false, mod_e = false, run = false, list = false;

    auto* c_class = app.add_subcommand("class", "minimal class (m,n) with witnesses");
    c_class->add_option("FILE", file, "map file (.qmap) or catalog:NAME")->required();

    auto* c_norm = app.add_subcommand("normalize", "normal form of a word");
    c_norm->add_option("FILE", file)->required();
    c_norm->add_option("WORD", word, "space-separated letters; ^ for the empty word")->required();
    c_norm->add_option("--strategy", strategy, "left_alt, right_alt, leftmost_reducible, recipe43")
        ->default_val("leftmost_reducible");
    c_norm->add_flag("--trace", trace);

    CheckFlags flags;
    auto*      c_check = app.add_subcommand("check", "table-level checks");
    c_check->add_option("FILE", file)->required();
    c_check->add_flag("--idempotent", flags.idempotent);
    c_check->add_flag("--neutral", flags.neutral);
    c_check->add_flag("--domino", flags.domino);
    c_check->add_flag("--weak-domino", flags.weak_domino);
    c_check->add_flag("--local-factorability", flags.local);
    c_check->add_flag("--stable212", flags.stable212);
    c_check->add_flag("--all", flags.all);

    auto* c_rules = app.add_subcommand("rules", "derived rewriting rules");
    c_rules->add_option("FILE", file)->required();
    c_rules->add_flag("--mod-e", mod_e, "project the neutral letter away");

    std::size_t budget = 10000;
    auto*       c_rw   = app.add_subcommand("rewrite", "run the derived rewriting system");
    c_rw->add_option("FILE", file)->required();
    c_rw->add_option("WORD", word)->required();
    c_rw->add_option("--strategy", strategy, "leftmost, rightmost, all_maximal")
        ->default_val("leftmost");
    c_rw->add_option("--budget", budget, "step budget (distinct words for all_maximal)");
    c_rw->add_flag("--trace", trace);

    MonoidFlags mflags;
    auto*       c_mon = app.add_subcommand("monoid", "the monoid model");
    c_mon->add_option("FILE", file)->required();
    c_mon->add_option("--max-len", mflags.max_len)->required();
    c_mon->add_flag("--check-stronger", mflags.stronger);
    c_mon->add_flag("--check-left-weighted", mflags.left_weighted);
    c_mon->add_flag("--check-greedy", mflags.greedy);
    c_mon->add_flag("--elements", mflags.elements);

    auto* c_cat = app.add_subcommand("catalog", "built-in examples");
    c_cat->add_option("NAME", name);
    c_cat->add_flag("--run", run, "run every check against the expected outcomes");
    c_cat->add_flag("--list", list);

    SearchOptions sopts;
    bool          neutral_flag = false;
    auto*         c_search     = app.add_subcommand("search", "enumerate or sample small maps");
    c_search->add_option("--letters", sopts.letters, "letters besides the neutral one")
        ->required();
    c_search->add_flag("--neutral", neutral_flag, "adjoin a neutral letter (always on)");
    c_search->add_option("--count", sopts.count, "random candidates");
    c_search->add_option("--seed", sopts.seed);
    c_search->add_option("--require", sopts.require)->delimiter(',');
    c_search->add_option("--forbid", sopts.forbid)->delimiter(',');
    c_search->add_option("--ceiling", sopts.ceiling, "largest table space enumerated exhaustively");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      out << report_header << "\n";
      app.exit(e, out, err);
      return 2;
    }

    out << report_header << "\n";
    try {
      if (c_class->parsed()) {
        return cmd_class(file, out);
      }
      if (c_norm->parsed()) {
        return cmd_normalize(file, word, strategy, trace, out);
      }
      if (c_check->parsed()) {
        return cmd_check(file, flags, out);
      }
      if (c_rules->parsed()) {
        return cmd_rules(file, mod_e, out);
      }
      if (c_rw->parsed()) {
        return cmd_rewrite(file, word, strategy, budget, trace, out);
      }
      if (c_mon->parsed()) {
        return cmd_monoid(file, mflags, out);
      }
      if (c_cat->parsed()) {
        return cmd_catalog(name, run, list, out);
      }
      if (c_search->parsed()) {
        sopts.workers = worker_count();
        return cmd_search(sopts, out);
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (std::domain_error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace quadnorm
