#include "commands.hpp"

#include "io.hpp"

#include "homzero/errors.hpp"
#include "homzero/reflector.hpp"

#include <json.hpp>

#include <cstdlib>
#include <functional>

namespace homzero::cli {

namespace {

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const Undecided& e) {
    return {{}, kUndecided, e.what()};
  } catch (const HypothesisFailure& e) {
    return {{}, kInvalid, e.what()};
  } catch (const InvalidInput& e) {
    return {{}, kInvalid, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {{}, kInvalid, std::string("malformed document: ") + e.what()};
  }
}

Execution execution(const Options& o) {
#if defined(HOMZERO_HAVE_OPENMP)
  if (o.jobs > 1) {
    omp_set_num_threads(o.jobs);
    return Execution::parallel;
  }
#endif
  (void)o;
  return Execution::serial;
}

std::string join_names(const FiniteSemigroup& s, std::span<const Element> xs) {
  std::string out;
  for (Element x : xs) out += (out.empty() ? "" : ", ") + s.name(x);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Verdict categoricity_verdict(const FiniteZeroSemigroup& s) {
  const auto v = is_categorical_at_zero(s);
  Verdict out{"categorical_at_zero", yes_no(v.categorical), true, ""};
  if (v.witness) out.detail = "xyz = 0 with xy, yz nonzero for (" + join_names(s, *v.witness) + ")";
  return out;
}

Verdict nilpotency_verdict(const FiniteZeroSemigroup& s) {
  const auto k = nilpotency_degree(s);
  return {"nilpotency_degree", k ? std::to_string(*k) : "none", true, ""};
}

// Adds the homology entries plus the note on where the tuple sets run out.
void add_homology(Report& r, const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const Options& o) {
  const auto groups = zero_homology_range(s, a, o.max_dim, execution(o));
  for (std::size_t n = 0; n < groups.size(); ++n) r.homology.push_back({n, groups[n]});
  if (const auto k = nilpotency_degree(s)) {
    r.notes.push_back({"D_" + std::to_string(*k) + " is empty, so the groups vanish in every dimension >= " +
                           std::to_string(std::max<std::size_t>(*k, 1)),
                       true});
  } else {
    r.notes.push_back({"dimensions above " + std::to_string(o.max_dim) + " were not computed", false});
  }
}

}  // namespace

void apply_environment(Options& o) {
  if (const char* env = std::getenv("HOMZERO_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InvalidInput("HOMZERO_BUDGET must be a positive integer");
    o.rewrite_budget = static_cast<std::size_t>(v);
    o.nu_budget = static_cast<std::size_t>(v);
  }
}

Outcome cmd_validate(const std::string& table_path) {
  return guarded([&] {
    const std::string text = read_file(table_path);
    Outcome out;
    out.report.command = "validate";
    out.report.input_digest = digest({text});
    const SemigroupDocument doc = parse_semigroup_json(text);
    try {
      if (doc.has_zero) {
        const auto s = doc.zero_semigroup();
        out.report.verdicts.push_back({"valid", "yes", true, std::to_string(s.size()) + " elements, zero at index 0"});
        out.report.verdicts.push_back(nilpotency_verdict(s));
        out.report.verdicts.push_back(categoricity_verdict(s));
      } else {
        const auto s = doc.plain_semigroup();
        out.report.verdicts.push_back({"valid", "yes", true, std::to_string(s.size()) + " elements"});
      }
    } catch (const TableViolation& e) {
      std::string witness;
      for (Element x : e.witness()) witness += (witness.empty() ? "" : ", ") + doc.names.at(x);
      out.report.verdicts.push_back({"valid", "no", true, std::string(e.what()) + " (witness " + witness + ")"});
      out.exit_code = kInvalid;
    }
    return out;
  });
}

Outcome cmd_cat0(const std::string& path, const Options& o) {
  return guarded([&] {
    const std::string text = read_file(path);
    Outcome out;
    out.report.command = "cat0";
    out.report.input_digest = digest({text});
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      out.report.verdicts.push_back(categoricity_verdict(parse_semigroup_json(text).zero_semigroup()));
      return out;
    }
    const ParsedPresentation parsed = parse_presentation(text);
    Presentation p = parsed.presentation;
    if (parsed.gamma_is_complement_of_delta) p = cat0_from_graph(p);
    p = normalize(p);
    const auto c = check_cat0_criterion(p);
    Verdict v{"criterion", yes_no(c.holds), true, ""};
    if (!c.holds)
      v.detail = "relation " + std::to_string(*c.relation + 1) + ": " +
                 (c.failure == CriterionVerdict::Failure::left ? "left gamma sets of the first letters differ"
                                                               : "right gamma sets of the last letters differ");
    out.report.verdicts.push_back(v);
    if (p.gamma.empty()) return out;
    try {
      const FiniteQuotient q = nilpotent_quotient(p, {0, o.rewrite_budget});
      verify_gamma_form(p, q);
      Verdict t = categoricity_verdict(q.semigroup);
      t.name = "categorical_at_zero (finite quotient)";
      out.report.verdicts.push_back(t);
      if ((t.value == "yes") != c.holds) out.report.warnings.push_back("criterion and table check disagree");
    } catch (const HypothesisFailure& e) {
      out.report.warnings.push_back(std::string("no finite quotient to cross-check: ") + e.what());
    }
    return out;
  });
}

Outcome cmd_h0(const std::string& semigroup_path, const std::string& module_path, const Options& o) {
  return guarded([&] {
    const std::string st = read_file(semigroup_path);
    const std::string mt = read_file(module_path);
    Outcome out;
    out.report.command = "h0";
    out.report.input_digest = digest({st, mt});
    out.report.subject = "H^0_n(S,A)";
    const auto s = parse_semigroup_json(st).zero_semigroup();
    const auto a = build_module(parse_module_json(mt), s);
    out.report.verdicts.push_back(categoricity_verdict(s));
    out.report.verdicts.push_back(nilpotency_verdict(s));
    add_homology(out.report, s, a, o);
    return out;
  });
}

Outcome cmd_bar(const std::string& semigroup_path, const std::string& module_path, const Options& o) {
  return guarded([&] {
    const std::string st = read_file(semigroup_path);
    const std::string mt = read_file(module_path);
    Outcome out;
    out.report.command = "bar";
    out.report.input_digest = digest({st, mt});
    out.report.subject = "H_n(S,A)";
    const auto s = parse_semigroup_json(st).plain_semigroup();
    const auto a = build_module(parse_module_json(mt), s);
    const ChainComplexFG c = bar_chain_complex(s, a, o.max_dim + 1, execution(o));
    for (std::size_t n = 0; n <= o.max_dim; ++n) out.report.homology.push_back({n, homology_of_complex(c, n, execution(o))});
    return out;
  });
}

Outcome cmd_pipeline(const std::string& presentation_path, const std::string& module_path, const Options& o) {
  return guarded([&] {
    const std::string pt = read_file(presentation_path);
    const std::string mt = read_file(module_path);
    Outcome out;
    Report& r = out.report;
    r.command = "pipeline";
    r.input_digest = digest({pt, mt});
    r.subject = "H_n(T,A)";
    const ParsedPresentation parsed = parse_presentation(pt);
    const RewriteBounds bounds{0, o.rewrite_budget};

    FiniteQuotient q;
    Presentation used = parsed.presentation;
    if (o.via == "ideal") {
      if (!used.gamma.empty() || used.has_zero_relations() || parsed.gamma_is_complement_of_delta)
        throw InvalidInput("the ideal route takes a presentation without zero relations or gamma");
      q = ideal_quotient(used, bounds);
      r.verdicts.push_back({"ideal_hypotheses", "yes", true,
                            "every generator divides a relation word and I(P) is nonempty"});
      r.verdicts.push_back({"reflector_is_T", "yes", false, "follows from the ideal construction"});
    } else if (o.via == "graph") {
      if (used.gamma.empty() && !used.has_zero_relations()) {
        const auto ee = entrance_exit_check(used);
        r.verdicts.push_back({"entrance_exit", yes_no(ee.applicable), true, ee.detail});
        const auto path = longest_path(delta_graph(used.generator_count(), used.nonzero_relations()));
        if (path.length) {
          r.verdicts.push_back({"longest_path", std::to_string(*path.length), true, ""});
        } else {
          r.verdicts.push_back({"longest_path", "none", true, "the graph has a circuit"});
        }
        used = cat0_from_graph(used);
      }
      used = normalize(used);
      q = nilpotent_quotient(used, bounds);
      verify_gamma_form(used, q);
      const auto c = check_cat0_criterion(used);
      r.verdicts.push_back({"criterion", yes_no(c.holds), true, ""});
      r.verdicts.push_back({"reflector_is_T", "yes", true, "zero relations of S are exactly the gamma pairs"});
    } else {
      throw InvalidInput("--via must be ideal or graph");
    }
    const Verdict cat = categoricity_verdict(q.semigroup);
    r.verdicts.push_back(cat);
    r.verdicts.push_back({"quotient_size", std::to_string(q.semigroup.size()), true, ""});
    if (cat.value != "yes") throw HypothesisFailure("categorical at zero", cat.detail);
    r.verdicts.push_back(nilpotency_verdict(q.semigroup));

    const ZeroModuleAction a = build_quotient_module(parse_module_json(mt), q, parsed.presentation);
    add_homology(r, q.semigroup, a, o);
    r.notes.push_back({"computed as H^0_n(S,A) for the finite categorical-at-zero S whose 0-reflector is T", true});
    return out;
  });
}

Outcome cmd_reflector_eq(const std::string& semigroup_path, const std::string& x, const std::string& y,
                         const Options& o) {
  return guarded([&] {
    const std::string st = read_file(semigroup_path);
    Outcome out;
    out.report.command = "reflector eq";
    out.report.input_digest = digest({st, x, y});
    const auto s = parse_semigroup_json(st).zero_semigroup();
    const auto a = make_reflector_element(s, parse_sequence(s, x));
    const auto b = make_reflector_element(s, parse_sequence(s, y));
    const NuVerdict v = nu_equivalent(s, a, b, {o.nu_budget, o.nu_max_length});
    out.report.verdicts.push_back({"nu_equivalent", to_string(v), v != NuVerdict::unknown, ""});
    if (v == NuVerdict::unknown) {
      out.report.warnings.push_back("search budget of " + std::to_string(o.nu_budget) + " sequences exhausted");
      out.exit_code = kUndecided;
    }
    return out;
  });
}

Outcome cmd_reflector_mul(const std::string& semigroup_path, const std::string& x, const std::string& y) {
  return guarded([&] {
    const std::string st = read_file(semigroup_path);
    Outcome out;
    out.report.command = "reflector mul";
    out.report.input_digest = digest({st, x, y});
    const auto s = parse_semigroup_json(st).zero_semigroup();
    const auto p = multiply(s, make_reflector_element(s, parse_sequence(s, x)),
                            make_reflector_element(s, parse_sequence(s, y)));
    out.report.verdicts.push_back({"product", "<" + join_names(s, p.seq) + ">", true, ""});
    return out;
  });
}

}  // namespace homzero::cli
