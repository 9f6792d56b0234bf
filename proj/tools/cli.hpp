#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lg/catalog.hpp"
#include "lg/json_io.hpp"
#include "lg/projector.hpp"

namespace lg::cli {

namespace detail {

inline Json report_json(const RingElem& value, const std::string& name = "") {
  Json j = ring_to_json(value);
  if (!name.empty()) j["name"] = name;
  j["palindromic"] = value.is_palindromic();
  j["inversion_symmetric"] = value.substituted(VarMap::inverse) == value;
  return j;
}

inline void report_text(std::ostream& out, const RingElem& value) {
  out << value.str() << "\n";
}

inline void report_checks(std::ostream& out, const RingElem& value) {
  const bool pal = value.is_palindromic();
  out << "palindromic:         " << (pal ? "yes" : "no") << "\n";
  out << "inversion symmetry:  "
      << (value.substituted(VarMap::inverse) == value ? "ok" : "VIOLATED")
      << "\n";
  out << "chirality:           "
      << (pal ? "inconclusive" : "chiral (invariant is not palindromic)")
      << "\n";
}

/// Invariant of either a catalog link name or a braid word string.
inline RingElem invariant_of(const std::string& input, std::string* name_out) {
  if (input.rfind("n=", 0) == 0) {
    if (name_out) name_out->clear();
    return lg_invariant(parse_braid(input));
  }
  const CatalogEntry& entry = get(input);
  if (name_out) *name_out = entry.name;
  return entry.braid ? lg_invariant(*entry.braid) : lg_of_network(entry.network());
}

inline Json dump_fixtures() {
  Json arr = Json::array();
  for (const std::string& name : catalog_names()) {
    const CatalogEntry& entry = get(name);
    Json rec = {{"name", entry.name},
                {"braid", entry.braid ? Json(to_string(*entry.braid)) : Json()},
                {"expected", poly_to_json(entry.expected.even())}};
    arr.push_back(std::move(rec));
  }
  return arr;
}

/// Runs one catalog entry end to end; returns true on fixture match.
inline bool run_catalog_entry(std::ostream& out, const CatalogEntry& entry,
                              bool as_json) {
  RingElem braid_value, network_value;
  bool have_braid = entry.braid.has_value();
  if (have_braid) braid_value = lg_invariant(*entry.braid);
  network_value = lg_of_network(entry.network());
  const RingElem& computed = have_braid ? braid_value : network_value;
  const bool pass = computed == entry.expected &&
                    network_value == entry.expected;
  if (as_json) {
    Json j = report_json(computed, entry.name);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << entry.name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    out << "  computed: " << computed.str() << "\n";
    if (!pass) out << "  expected: " << entry.expected.str() << "\n";
  }
  return pass;
}

inline int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const char* label, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << label << "\n";
    if (!ok) ++failures;
  };

  check("sigma * sigma^-1 = I (build-time table check)", [] {
    sigma_inv();
    return true;
  }());
  check("Omega- Mho- = I", [] {
    const FreeIndex frees[2] = {{"c", Slot::upper}, {"a", Slot::lower}};
    return contract_tensors({{cap_cup(CapCupKind::omega_minus), {"a", "b"}},
                             {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                            frees) == Tensor::identity_pair();
  }());
  check("loop removal, both crossing signs", [] {
    const FreeIndex frees[2] = {{"y", Slot::upper}, {"x", Slot::lower}};
    for (const Tensor& x : {sigma(), sigma_inv()}) {
      if (contract_tensors({{x, {"y", "a", "x", "b"}},
                            {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
                            {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                           frees) != Tensor::identity_pair())
        return false;
    }
    return true;
  }());
  check("Yang-Baxter braid relation on three strands", [] {
    BraidMatrix lhs = eval_braid({3, {1, 2, 1}});
    BraidMatrix rhs = eval_braid({3, {2, 1, 2}});
    for (std::size_t r = 0; r < 64; ++r)
      if (lhs.row(r) != rhs.row(r)) return false;
    return true;
  }());
  check("cubic skein identity", [] {
    const Tensor s2 = power(sigma(), 2);
    const Tensor s3 = power(sigma(), 3);
    const Tensor id = Tensor::identity_crossing();
    const RingElem c3 = q_pow(-1);
    const RingElem c2 = q_pow(-1) - qp_pow(-1, -2) - qp_pow(1, 2);
    const RingElem c1 = q_pow(1) - qp_pow(-1, -2) - qp_pow(1, 2);
    for (std::size_t i = 0; i < s3.size(); ++i)
      if (!(c3 * s3[i] + c2 * s2[i] + c1 * sigma()[i] + q_pow(1) * id[i])
               .is_zero())
        return false;
    return true;
  }());
  check("projector reconstruction at sample parameters", [] {
    return numeric_projector_check(1.3, 0.7, 1e-9) &&
           numeric_projector_check(0.8, 1.1, 1e-9) &&
           numeric_projector_check(1.1, 1.3, 1e-9);
  }());
  check("small catalog links reproduce their fixtures on both paths", [] {
    for (const char* name : {"0_1", "2^2_1", "3_1", "4_1", "5^2_1"}) {
      const CatalogEntry& entry = get(name);
      if (lg_invariant(*entry.braid) != entry.expected) return false;
      if (lg_of_network(entry.network()) != entry.expected) return false;
    }
    return true;
  }());

  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace detail

/// Command-line entry point, separated from main() so tests can drive it
/// in process.  Returns the process exit status: 0 success, 1 mathematical
/// failure (fixture mismatch, invariant-shape violation), 2 bad input.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Links-Gould two-variable link invariant calculator"};
  app.require_subcommand(1);

  std::string eval_word;
  bool eval_json = false;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate the invariant of a braid word, e.g. \"n=2; 1 1 1\"");
  eval->add_option("braid", eval_word, "braid word: n=<strands>; letters")
      ->required();
  eval->add_flag("--json", eval_json, "emit JSON");

  std::string catalog_name;
  bool catalog_all = false, catalog_json = false, catalog_dump = false;
  CLI::App* cat = app.add_subcommand(
      "catalog", "Recompute a catalog link and compare with its fixture");
  cat->add_option("name", catalog_name, "link name, e.g. 4_1 or 10_48");
  cat->add_flag("--all", catalog_all, "run every catalog link");
  cat->add_flag("--json", catalog_json, "emit JSON");
  cat->add_flag("--dump", catalog_dump, "print the fixture file JSON");

  std::string check_spec;
  bool check_json = false;
  CLI::App* chk = app.add_subcommand(
      "check", "Chirality / symmetry report for a braid word or link name");
  chk->add_option("input", check_spec, "braid word or catalog link name")
      ->required();
  chk->add_flag("--json", check_json, "emit JSON");

  std::vector<int> pretzel_params;
  bool pretzel_json = false;
  CLI::App* pre = app.add_subcommand(
      "pretzel", "Invariant of the (p,q,r) noninvertible pretzel knot");
  pre->add_option("pqr", pretzel_params, "three odd, distinct values > 1")
      ->expected(3);
  pre->add_flag("--json", pretzel_json, "emit JSON");

  app.add_subcommand("selftest",
                     "Run the symbolic identity and reconstruction checks");

  std::vector<const char*> argv = {"lg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      RingElem v = lg_invariant(parse_braid(eval_word));
      if (eval_json)
        out << detail::report_json(v).dump(2) << "\n";
      else
        detail::report_text(out, v);
      return 0;
    }
    if (cat->parsed()) {
      if (catalog_dump) {
        out << detail::dump_fixtures().dump(2) << "\n";
        return 0;
      }
      if (!catalog_all && catalog_name.empty())
        throw lg::ParseError("catalog needs a link name or --all");
      bool all_pass = true;
      if (catalog_all) {
        for (const std::string& name : catalog_names())
          all_pass &= detail::run_catalog_entry(out, get(name), catalog_json);
      } else {
        all_pass = detail::run_catalog_entry(out, get(catalog_name), catalog_json);
      }
      return all_pass ? 0 : 1;
    }
    if (chk->parsed()) {
      std::string name;
      RingElem v = detail::invariant_of(check_spec, &name);
      if (check_json) {
        out << detail::report_json(v, name).dump(2) << "\n";
      } else {
        if (!name.empty()) out << "link:                " << name << "\n";
        out << "invariant:           " << v.str() << "\n";
        detail::report_checks(out, v);
      }
      return 0;
    }
    if (pre->parsed()) {
      RingElem v = lg_of_network(
          pretzel(pretzel_params[0], pretzel_params[1], pretzel_params[2]));
      if (pretzel_json) {
        out << detail::report_json(v).dump(2) << "\n";
      } else {
        detail::report_text(out, v);
        detail::report_checks(out, v);
      }
      return 0;
    }
    return detail::run_selftest(out);
  } catch (const lg::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const lg::UnknownLink& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const lg::BadPretzelParams& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const lg::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lg::cli
