#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "nsgp/covariety.hpp"
#include "nsgp/gencov.hpp"
#include "nsgp/oracle.hpp"
#include "nsgp/render.hpp"
#include "nsgp/rfm.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp::cli {

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("cannot parse integer '" + token + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::vector<std::vector<Int>> parse_families(const std::string& text) {
  std::vector<std::vector<Int>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    out.push_back(parse_int_list(text.substr(pos, semi - pos)));
    if (semi == text.size()) break;
    pos = semi + 1;
  }
  return out;
}

int threads_from(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("NSGP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

struct Sink {
  std::ostream& fallback;
  std::string path;

  void write(const std::string& payload) const {
    if (path.empty()) {
      fallback << payload;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << payload;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string delta_name(Int f, Int m) {
  return "Δ(" + std::to_string(f) + "," + std::to_string(m) + ")";
}

std::string family_name(Int f, Int m) {
  return "R(" + std::to_string(f) + "," + std::to_string(m) + ")";
}

std::string semigroup_line(const NumericalSemigroup& s) {
  return to_text(s) + "  g=" + std::to_string(s.genus()) +
         " F=" + std::to_string(s.frobenius());
}

// ---- analyze ----

std::string analyze_text(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "S = " << to_text(s) << "\n";
  out << "multiplicity m = " << s.multiplicity() << "\n";
  out << "frobenius    F = " << s.frobenius() << "\n";
  out << "genus        g = " << s.genus() << "\n";
  if (s.is_naturals()) {
    out << "ratio        r = undefined (S is all of N)\n";
    out << "embedding dimension e = 1\n";
    return out.str();
  }
  out << "ratio        r = " << s.ratio() << "\n";
  out << "embedding dimension e = " << s.embedding_dimension() << "\n";
  out << "Ap(S," << s.multiplicity() << ") = " << set_to_string(s.apery_set()) << "\n";
  out << "gaps = " << set_to_string(s.gaps()) << "\n";
  out << "PF = " << set_to_string(s.pseudo_frobenius()) << "\n";
  out << "SG = " << set_to_string(s.special_gaps()) << "\n";
  const auto a = s.a_set();
  out << "A(S) = " << set_to_string(a) << " (a = " << a.size() << ")\n";
  const auto c = classify(s);
  out << "symmetric: " << yes_no(c.symmetric) << "\n";
  out << "pseudo-symmetric: " << yes_no(c.pseudo_symmetric) << "\n";
  out << "irreducible: " << yes_no(c.irreducible) << "\n";
  out << "MED: " << yes_no(c.med) << "\n";
  return out.str();
}

Json analyze_json(const NumericalSemigroup& s) {
  Json j;
  j["semigroup"] = to_json(s);
  if (s.is_naturals()) {
    j["ratio"] = nullptr;
    j["embedding_dimension"] = 1;
    return j;
  }
  j["ratio"] = s.ratio();
  j["embedding_dimension"] = s.embedding_dimension();
  j["gaps"] = s.gaps();
  j["pseudo_frobenius"] = s.pseudo_frobenius();
  j["special_gaps"] = s.special_gaps();
  j["a_set"] = s.a_set();
  const auto c = classify(s);
  j["classification"] = {{"symmetric", c.symmetric},
                         {"pseudo_symmetric", c.pseudo_symmetric},
                         {"irreducible", c.irreducible},
                         {"med", c.med}};
  return j;
}

// ---- verify ----

struct VerifyContext {
  int threads = 1;
  Int max_frobenius = 16;
};

bool sets_equal(std::vector<NumericalSemigroup> a, std::vector<NumericalSemigroup> b) {
  auto key = [](const NumericalSemigroup& s) {
    return std::make_pair(s.multiplicity(), s.apery_table());
  };
  auto less = [&](const NumericalSemigroup& x, const NumericalSemigroup& y) {
    return key(x) < key(y);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

bool check_example_8() {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  return s.pseudo_frobenius() == std::vector<Int>{2, 4} &&
         s.special_gaps() == std::vector<Int>{4};
}

bool check_example_18_21() {
  const auto s = NumericalSemigroup::from_generators({7, 8, 9, 10, 11, 12, 13});
  if (s.apery_set() != std::vector<Int>{0, 8, 9, 10, 11, 12, 13}) return false;
  if (s.pseudo_frobenius() != std::vector<Int>{1, 2, 3, 4, 5, 6}) return false;
  if (s.special_gaps() != std::vector<Int>{4, 5, 6}) return false;
  auto gens = s.min_generators();
  gens.push_back(5);
  const auto t = NumericalSemigroup::from_generators(gens);
  return t.apery_set(7) == std::vector<Int>{0, 5, 8, 9, 10, 11, 13};
}

bool check_example_23() {
  const auto tree = rfm_enumerate(RfmFamily::create(7, 4));
  if (tree.size() != 4) return false;
  std::vector<std::vector<Int>> tables;
  for (const auto& v : tree.vertices) tables.push_back(v.apery_set());
  std::sort(tables.begin(), tables.end());
  const std::vector<std::vector<Int>> expected{
      {0, 5, 6, 11}, {0, 5, 10, 11}, {0, 6, 9, 11}, {0, 9, 10, 11}};
  return tables == expected;
}

bool check_example_33() {
  const auto fam = RfmFamily::create(12, 5);
  auto added = [&](const std::vector<NumericalSemigroup>& level) {
    std::vector<std::vector<Int>> out;
    for (const auto& v : level) out.push_back(detail::added_elements(v, fam.minimum()));
    std::sort(out.begin(), out.end());
    return out;
  };
  return added(rfm_enumerate_genus(fam, 8)) ==
             std::vector<std::vector<Int>>{{8, 9}, {8, 11}, {9, 11}} &&
         added(rfm_enumerate_genus(fam, 9)) ==
             std::vector<std::vector<Int>>{{8}, {9}, {11}};
}

bool check_example_50() {
  const auto s1 = NumericalSemigroup::from_generators({5, 7, 9, 11});
  const auto s2 = NumericalSemigroup::from_generators({5, 12, 13, 14, 21});
  return is_mr(s1) && rfm_rank(s1, RfmFamily::create(13, 5)) == 3 &&
         is_mr(s2) && rfm_rank(s2, RfmFamily::create(16, 5)) == 3;
}

bool check_example_58(int threads) {
  const auto s1 = NumericalSemigroup::from_generators({5, 7, 9});
  const auto s2 = NumericalSemigroup::from_generators({5, 6, 8});
  const auto o1 = omega_chain(s1, 13, 5);
  const auto o2 = omega_chain(s2, 13, 5);
  if (o1.removed != std::vector<Int>{7, 9, 12}) return false;
  if (o2.removed != std::vector<Int>{6, 8, 11, 12, 13}) return false;
  EnumerateOptions options;
  options.threads = threads;
  const auto tree = generated_covariety({s1, s2}, options);
  std::unordered_set<NumericalSemigroup, SemigroupHash> expected;
  for (const auto& t1 : o1.chain) expected.insert(t1);
  for (const auto& t2 : o2.chain) expected.insert(t2);
  for (const auto& t1 : o1.chain)
    for (const auto& t2 : o2.chain) expected.insert(intersect(t1, t2));
  if (expected.size() != tree.size()) return false;
  for (const auto& v : tree.vertices)
    if (!expected.count(v)) return false;
  return verify_axioms(tree).ok();
}

bool check_oracle_sweep(const VerifyContext& ctx) {
  EnumerateOptions options;
  options.threads = ctx.threads;
  for (Int f = 3; f <= ctx.max_frobenius; ++f)
    for (Int m = 2; m < f; ++m) {
      if (f % m == 0) continue;
      const auto tree = rfm_enumerate(RfmFamily::create(f, m), options);
      if (!sets_equal(tree.vertices, oracle::rfm(f, m))) return false;
    }
  return true;
}

bool check_closure_sweep(const VerifyContext& ctx) {
  const Int cap = std::min<Int>(ctx.max_frobenius, 12);
  for (Int f = 3; f <= cap; ++f)
    for (Int m = 2; m < f; ++m) {
      if (f % m == 0) continue;
      const auto fam = RfmFamily::create(f, m);
      std::vector<Int> pool;
      for (Int x = m + 1; x < f; ++x)
        if (x % m != 0) pool.push_back(x);
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
          std::vector<Int> x{pool[i]};
          if (j != i) x.push_back(pool[j]);
          if (!is_rfm_set(x, fam)) continue;
          if (rfm_closure(make_rset(x, fam)) != oracle::closure(x, f, m)) return false;
        }
    }
  return true;
}

bool check_mr_witness_sweep() {
  for (Int f = 5; f <= 20; ++f)
    for (Int m = 2; 2 * m < f; ++m) {
      if (f % m == 0) continue;
      if (rfm_rank(mr_witness(f, m), RfmFamily::create(f, m)) != m - 2) return false;
    }
  return true;
}

bool check_single_generation() {
  std::mt19937_64 rng(20240705);
  int done = 0;
  while (done < 10) {
    const Int m = 2 + static_cast<Int>(rng() % 7);
    std::vector<Int> gens{m};
    Int g = m;
    for (int k = 0; k < 3; ++k) {
      gens.push_back(m + 1 + static_cast<Int>(rng() % 19));
      g = std::gcd(g, gens.back());
    }
    if (g != 1) continue;
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.is_naturals() || s.frobenius() > 20) continue;
    const auto chain = ratio_chain(s);
    const auto tree = generated_covariety({s});
    if (!sets_equal(chain, tree.vertices)) return false;
    ++done;
  }
  return true;
}

int run_verify(const VerifyContext& ctx, std::ostream& out) {
  using Check = std::pair<std::string, std::function<bool()>>;
  const std::vector<Check> checks{
      {"example-8-pf-and-special-gaps", check_example_8},
      {"example-18-21-apery-adjoin", check_example_18_21},
      {"example-23-full-enumeration", check_example_23},
      {"example-33-genus-slices", check_example_33},
      {"example-50-maximal-rank", check_example_50},
      {"example-58-generated-covariety", [&] { return check_example_58(ctx.threads); }},
      {"oracle-sweep", [&] { return check_oracle_sweep(ctx); }},
      {"closure-vs-oracle-sweep", [&] { return check_closure_sweep(ctx); }},
      {"mr-witness-rank-sweep", check_mr_witness_sweep},
      {"single-semigroup-generation", check_single_generation},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  }
  out << "verify: " << (checks.size() - failures) << "/" << checks.size()
      << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

std::string axiom_summary(const CovarietyTree& tree) {
  const auto report = verify_axioms(tree);
  std::ostringstream out;
  out << "axioms: minimum " << (report.minimum_ok ? "ok" : "VIOLATED") << ", intersections "
      << (report.intersection_ok ? "ok" : "VIOLATED") << ", ratio-removals "
      << (report.ratio_removal_ok ? "ok" : "VIOLATED") << "\n";
  return out.str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerical semigroups, Apery sets and ratio-covariety enumeration"};
  app.require_subcommand(1);

  std::string generators, elements, semigroups, format = "text", out_path;
  Int frobenius = 0, multiplicity = 0, genus = -1, max_frobenius = 16;
  int threads_flag = 0;
  bool use_oracle = false, check_axioms = false;

  auto add_format = [&](CLI::App* cmd, const std::string& choices) {
    cmd->add_option("--format", format, "output format (" + choices + ")")
        ->check(CLI::IsMember(CLI::detail::split(choices, '|')));
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the result to a file instead of stdout");
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads_flag,
                    "worker threads for level expansion (default NSGP_THREADS or 1)");
  };

  auto* analyze = app.add_subcommand("analyze", "invariants of a single semigroup");
  analyze->add_option("--generators", generators, "comma separated generators")->required();
  add_format(analyze, "text|json");
  add_out(analyze);

  auto* enumerate = app.add_subcommand("enumerate", "all of R(F,m), optionally at one genus");
  enumerate->add_option("--frobenius", frobenius, "Frobenius number F")->required();
  enumerate->add_option("--multiplicity", multiplicity, "multiplicity m")->required();
  enumerate->add_option("--genus", genus, "restrict to members of this genus");
  enumerate->add_flag("--oracle", use_oracle, "use the brute-force reference enumeration");
  enumerate->add_flag("--verify-axioms", check_axioms,
                      "check the ratio-covariety axioms on the result");
  add_format(enumerate, "text|json|dot");
  add_out(enumerate);
  add_threads(enumerate);

  auto* genus_range_cmd = app.add_subcommand("genus-range", "genus spectrum of R(F,m)");
  genus_range_cmd->add_option("--frobenius", frobenius, "Frobenius number F")->required();
  genus_range_cmd->add_option("--multiplicity", multiplicity, "multiplicity m")->required();
  add_format(genus_range_cmd, "text|json");
  add_out(genus_range_cmd);

  auto* max_elements_cmd = app.add_subcommand("max-elements", "maximal members of R(F,m)");
  max_elements_cmd->add_option("--frobenius", frobenius, "Frobenius number F")->required();
  max_elements_cmd->add_option("--multiplicity", multiplicity, "multiplicity m")->required();
  add_format(max_elements_cmd, "text|json");
  add_out(max_elements_cmd);
  add_threads(max_elements_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "smallest member of R(F,m) containing a set");
  closure_cmd->add_option("--frobenius", frobenius, "Frobenius number F")->required();
  closure_cmd->add_option("--multiplicity", multiplicity, "multiplicity m")->required();
  closure_cmd->add_option("--elements", elements, "comma separated R-set elements");
  add_format(closure_cmd, "text|json");
  add_out(closure_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "minimal R(F,m)-system and rank of a member");
  rank_cmd->add_option("--generators", generators, "comma separated generators")->required();
  rank_cmd->add_option("--frobenius", frobenius, "family F (default F(S))");
  rank_cmd->add_option("--multiplicity", multiplicity, "family m (default m(S))");
  add_format(rank_cmd, "text|json");
  add_out(rank_cmd);

  auto* mr_cmd = app.add_subcommand("mr-check", "maximal-rank classification of a semigroup");
  mr_cmd->add_option("--generators", generators, "comma separated generators")->required();
  add_format(mr_cmd, "text|json");
  add_out(mr_cmd);

  auto* gencov_cmd = app.add_subcommand(
      "generate-covariety", "smallest ratio-covariety containing the given semigroups");
  gencov_cmd
      ->add_option("--semigroups", semigroups,
                   "semicolon separated generator lists, e.g. \"5,7,9;5,6,8\"")
      ->required();
  gencov_cmd->add_flag("--verify-axioms", check_axioms,
                       "check the ratio-covariety axioms on the result");
  add_format(gencov_cmd, "text|json|dot");
  add_out(gencov_cmd);
  add_threads(gencov_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "replay the built-in reference checks");
  verify_cmd->add_option("--max-frobenius", max_frobenius,
                         "upper bound of the enumeration sweeps (default 16)");
  add_threads(verify_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    const Sink sink{out, out_path};
    EnumerateOptions options;
    options.threads = threads_from(threads_flag);

    if (*analyze) {
      const auto s = NumericalSemigroup::from_generators(parse_int_list(generators));
      sink.write(format == "json" ? analyze_json(s).dump(2) + "\n" : analyze_text(s));
      return 0;
    }

    if (*enumerate) {
      const auto fam = RfmFamily::create(frobenius, multiplicity);
      const bool single_genus = enumerate->count("--genus") > 0;
      if (format == "dot" && (single_genus || use_oracle))
        throw std::invalid_argument("--format dot requires the full tree enumeration");

      std::string payload;
      std::string diagnostics;
      if (single_genus || use_oracle) {
        std::vector<NumericalSemigroup> members;
        if (use_oracle) {
          members = oracle::rfm(frobenius, multiplicity);
          if (single_genus) {
            std::erase_if(members, [&](const auto& s) { return s.genus() != genus; });
          }
          // canonical (genus descending, added set) order, as the tree emits
          std::sort(members.begin(), members.end(), [&](const auto& a, const auto& b) {
            if (a.genus() != b.genus()) return a.genus() > b.genus();
            return detail::added_elements(a, fam.minimum()) <
                   detail::added_elements(b, fam.minimum());
          });
        } else {
          members = rfm_enumerate_genus(fam, genus, options);
          if (members.empty()) {
            const auto range = genus_range(frobenius, multiplicity);
            diagnostics = "note: genus " + std::to_string(genus) + " is outside " +
                          family_name(frobenius, multiplicity) + "'s range " +
                          std::to_string(range.lo) + ".." + std::to_string(range.hi) + "\n";
          }
        }
        std::ostringstream text;
        const std::string label =
            single_genus ? family_name(frobenius, multiplicity) + " at genus " +
                               std::to_string(genus)
                         : family_name(frobenius, multiplicity);
        if (format == "json") {
          Json j;
          j["frobenius"] = frobenius;
          j["multiplicity"] = multiplicity;
          if (single_genus) j["genus"] = genus;
          j["count"] = members.size();
          Json arr = Json::array();
          for (const auto& s : members) arr.push_back(to_json(s));
          j["semigroups"] = std::move(arr);
          payload = j.dump(2) + "\n";
        } else {
          text << label << " has " << members.size() << " element"
               << (members.size() == 1 ? "" : "s") << "\n";
          for (const auto& s : members) text << semigroup_line(s) << "\n";
          payload = text.str();
        }
      } else {
        const auto tree = rfm_enumerate(fam, options);
        if (check_axioms) diagnostics = axiom_summary(tree);
        if (format == "json") {
          Json j;
          j["frobenius"] = frobenius;
          j["multiplicity"] = multiplicity;
          j.update(to_json(tree));
          payload = j.dump(2) + "\n";
        } else if (format == "dot") {
          payload = to_dot(tree);
        } else {
          std::ostringstream text;
          text << family_name(frobenius, multiplicity) << " has " << tree.size()
               << " element" << (tree.size() == 1 ? "" : "s") << ", minimum "
               << delta_name(frobenius, multiplicity) << "\n";
          for (const auto& s : tree.vertices) text << semigroup_line(s) << "\n";
          payload = text.str();
        }
      }
      sink.write(payload);
      if (!diagnostics.empty()) err << diagnostics;
      return 0;
    }

    if (*genus_range_cmd) {
      const auto range = genus_range(frobenius, multiplicity);
      if (format == "json") {
        Json j{{"frobenius", frobenius},
               {"multiplicity", multiplicity},
               {"lo", range.lo},
               {"hi", range.hi},
               {"count", range.count()}};
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream text;
        text << "genus values of " << family_name(frobenius, multiplicity) << ": "
             << range.lo << ".." << range.hi << " (" << range.count() << " value"
             << (range.count() == 1 ? "" : "s") << ")\n";
        sink.write(text.str());
      }
      return 0;
    }

    if (*max_elements_cmd) {
      const auto maxima = maximal_elements(frobenius, multiplicity, options);
      if (format == "json") {
        Json j;
        j["frobenius"] = frobenius;
        j["multiplicity"] = multiplicity;
        j["count"] = maxima.size();
        Json arr = Json::array();
        for (const auto& s : maxima) arr.push_back(to_json(s));
        j["semigroups"] = std::move(arr);
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream text;
        text << "Max(" << family_name(frobenius, multiplicity) << ") has " << maxima.size()
             << " element" << (maxima.size() == 1 ? "" : "s") << "\n";
        for (const auto& s : maxima) text << semigroup_line(s) << "\n";
        sink.write(text.str());
      }
      return 0;
    }

    if (*closure_cmd) {
      const auto fam = RfmFamily::create(frobenius, multiplicity);
      const auto xs = parse_int_list(elements);
      const auto rset = make_rset(xs, fam);
      const auto s = rfm_closure(rset);
      if (format == "json") {
        Json j;
        j["frobenius"] = frobenius;
        j["multiplicity"] = multiplicity;
        j["elements"] = rset.elements;
        j["closure"] = to_json(s);
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream text;
        text << family_name(frobenius, multiplicity) << "["
             << set_to_string(rset.elements) << "] = " << to_text(s) << "\n";
        sink.write(text.str());
      }
      return 0;
    }

    if (*rank_cmd) {
      const auto s = NumericalSemigroup::from_generators(parse_int_list(generators));
      if (rank_cmd->count("--frobenius") != rank_cmd->count("--multiplicity"))
        throw std::invalid_argument("--frobenius and --multiplicity must be given together");
      const Int f = rank_cmd->count("--frobenius") ? frobenius : s.frobenius();
      const Int m = rank_cmd->count("--multiplicity") ? multiplicity : s.multiplicity();
      const auto fam = RfmFamily::create(f, m);
      const auto system = rfm_minimal_generators(s, fam);
      if (format == "json") {
        Json j;
        j["frobenius"] = f;
        j["multiplicity"] = m;
        j["semigroup"] = to_json(s);
        j["minimal_system"] = system.elements;
        j["rank"] = system.elements.size();
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream text;
        text << "S = " << to_text(s) << "\n";
        text << "minimal " << family_name(f, m)
             << "-system: " << set_to_string(system.elements) << "\n";
        text << family_name(f, m) << "-rank = " << system.elements.size() << "\n";
        sink.write(text.str());
      }
      return 0;
    }

    if (*mr_cmd) {
      const auto s = NumericalSemigroup::from_generators(parse_int_list(generators));
      const bool mr = is_mr(s);
      const Int f = s.frobenius();
      const Int m = s.multiplicity();
      if (format == "json") {
        Json j;
        j["semigroup"] = to_json(s);
        j["embedding_dimension"] = s.embedding_dimension();
        if (f > 2 * m) j["rank"] = rfm_rank(s, RfmFamily::create(f, m));
        j["is_mr"] = mr;
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream text;
        text << "S = " << to_text(s) << "\n";
        text << "F = " << f << ", m = " << m << ", e = " << s.embedding_dimension() << "\n";
        if (f > 2 * m)
          text << family_name(f, m) << "-rank = " << rfm_rank(s, RfmFamily::create(f, m))
               << " (maximum possible m-2 = " << m - 2 << ")\n";
        else
          text << "F <= 2m, so the maximal-rank condition fails upfront\n";
        text << "MR-semigroup: " << yes_no(mr) << "\n";
        sink.write(text.str());
      }
      return 0;
    }

    if (*gencov_cmd) {
      std::vector<NumericalSemigroup> family;
      for (const auto& gens : parse_families(semigroups))
        family.push_back(NumericalSemigroup::from_generators(gens));
      const auto tree = generated_covariety(family, options);
      std::string diagnostics;
      if (check_axioms) diagnostics = axiom_summary(tree);
      const Int f = tree.root().frobenius();
      const Int m = tree.root().multiplicity();
      if (format == "json") {
        Json j;
        j["generators"] = parse_families(semigroups);
        j.update(to_json(tree));
        sink.write(j.dump(2) + "\n");
      } else if (format == "dot") {
        sink.write(to_dot(tree));
      } else {
        std::ostringstream text;
        text << "ratio-covariety generated by " << family.size() << " semigroup"
             << (family.size() == 1 ? "" : "s") << ": " << tree.size()
             << " members, minimum " << delta_name(f, m) << "\n";
        for (const auto& s : tree.vertices) text << semigroup_line(s) << "\n";
        sink.write(text.str());
      }
      if (!diagnostics.empty()) err << diagnostics;
      return 0;
    }

    if (*verify_cmd) {
      VerifyContext ctx;
      ctx.threads = options.threads;
      ctx.max_frobenius = max_frobenius;
      return run_verify(ctx, out);
    }

    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nsgp::cli
