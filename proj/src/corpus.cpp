#include "s02e/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "s02e/errors.hpp"

namespace s02e {

namespace {

using json = nlohmann::ordered_json;

ProofNodePtr axf(const std::string& name, Sequent s) {
  return make_node(RuleTag::Axiom, std::move(s), {}, name);
}

ProofNodePtr idn(const FormulaPtr& a) { return make_node(RuleTag::Identity, Sequent{{a}, {a}}); }

Sequent tweak_axiom(const Sequent& pattern) {
  Sequent s = pattern;
  const FormulaPtr& f = s.sucs.at(0);
  FormulaPtr pos = f->pred == Pred::Le  ? f_le(t_s0(f->t1), f->t2)
                   : f->pred == Pred::Eq ? f_eq(t_s0(f->t1), f->t2)
                                         : f_e(t_s0(f->t1));
  s.sucs[0] = f->neg ? f_neg(pos) : pos;
  return s;
}

CorpusEntry entry(std::string file, std::string kind, std::string name, bool accept,
                  std::string category, const ProofNodePtr& p) {
  CorpusEntry e;
  e.file = std::move(file);
  e.kind = std::move(kind);
  e.name = std::move(name);
  e.expect = accept ? "accept" : "reject";
  e.category = std::move(category);
  e.text = print_proof(p);
  return e;
}

void add_axiom_entries(std::vector<CorpusEntry>& out) {
  for (const std::string& name : axiom_names()) {
    const Sequent pattern = axiom_patterns(name).at(0);
    out.push_back(
        entry("axiom_" + name + "_ok.s02e", "axiom", name, true, "", axf(name, pattern)));
    out.push_back(entry("axiom_" + name + "_bad.s02e", "axiom", name, false, "axiom-mismatch",
                        axf(name, tweak_axiom(pattern))));
  }
}

// Shared building blocks for the rule entries.
FormulaPtr E0() { return f_e(t_zero()); }
FormulaPtr Ex(unsigned v) { return f_e(t_var(v)); }

ProofNodePtr ax_e_zero() { return axf("e-zero", Sequent{{}, {E0()}}); }

ProofNodePtr weak_l(const FormulaPtr& f, const ProofNodePtr& p) {
  Sequent s = p->concl;
  s.ants.insert(s.ants.begin(), f);
  return make_node(RuleTag::WeakL, std::move(s), {p});
}

ProofNodePtr weak_r(const FormulaPtr& f, const ProofNodePtr& p) {
  Sequent s = p->concl;
  s.sucs.push_back(f);
  return make_node(RuleTag::WeakR, std::move(s), {p});
}

void add_rule_entries(std::vector<CorpusEntry>& out) {
  auto add = [&out](const char* name, bool accept, std::string category, const ProofNodePtr& p) {
    out.push_back(entry(std::string("rule_") + name + (accept ? "_ok" : "_bad") + ".s02e",
                        "rule", name, accept, std::move(category), p));
  };

  const FormulaPtr le01 = f_le(t_var(1), t_var(2));
  const FormulaPtr le0x = f_le(t_zero(), t_var(1));
  const FormulaPtr eq00 = f_eq(t_zero(), t_zero());
  const TermPtr two = numeral(2);
  const TermPtr one = numeral(1);
  const TermPtr len2 = t_len(two);
  const TermPtr len1 = t_len(one);

  // identity
  add("identity", true, "", idn(le01));
  add("identity", false, "not-atomic",
      make_node(RuleTag::Identity, Sequent{{f_and(eq00, eq00)}, {f_and(eq00, eq00)}}));

  // axiom
  add("axiom", true, "", ax_e_zero());
  add("axiom", false, "unknown-axiom", axf("no-such-schema", Sequent{{}, {E0()}}));

  // weak-l / weak-r
  add("weak-l", true, "", weak_l(Ex(1), ax_e_zero()));
  {
    ProofNodePtr prem = weak_l(Ex(1), ax_e_zero());
    Sequent s = prem->concl;
    s.ants.push_back(Ex(2));  // grew at the back, not the front
    add("weak-l", false, "rule-shape", make_node(RuleTag::WeakL, std::move(s), {prem}));
  }
  add("weak-r", true, "", weak_r(Ex(1), ax_e_zero()));
  {
    ProofNodePtr prem = ax_e_zero();
    Sequent s = prem->concl;
    s.sucs.insert(s.sucs.begin(), Ex(1));  // grew at the front, not the back
    add("weak-r", false, "rule-shape", make_node(RuleTag::WeakR, std::move(s), {prem}));
  }

  // contr-l / contr-r
  {
    ProofNodePtr dup = weak_l(Ex(1), weak_l(Ex(1), ax_e_zero()));
    add("contr-l", true, "", make_node(RuleTag::ContrL, weak_l(Ex(1), ax_e_zero())->concl, {dup}));
    ProofNodePtr mixed = weak_l(Ex(1), weak_l(Ex(2), ax_e_zero()));
    add("contr-l", false, "rule-shape",
        make_node(RuleTag::ContrL, weak_l(Ex(1), ax_e_zero())->concl, {mixed}));
  }
  {
    ProofNodePtr dup = weak_r(E0(), ax_e_zero());
    add("contr-r", true, "", make_node(RuleTag::ContrR, ax_e_zero()->concl, {dup}));
    ProofNodePtr mixed = weak_r(Ex(1), ax_e_zero());
    add("contr-r", false, "rule-shape",
        make_node(RuleTag::ContrR, ax_e_zero()->concl, {mixed}));
  }

  // exch-l / exch-r
  {
    ProofNodePtr prem = weak_l(Ex(2), weak_l(Ex(1), ax_e_zero()));
    add("exch-l", true, "",
        make_node(RuleTag::ExchL, Sequent{{Ex(1), Ex(2)}, {E0()}}, {prem}));
    ProofNodePtr prem3 = weak_l(Ex(3), weak_l(Ex(2), weak_l(Ex(1), ax_e_zero())));
    add("exch-l", false, "rule-shape",
        make_node(RuleTag::ExchL, Sequent{{Ex(1), Ex(2), Ex(3)}, {E0()}}, {prem3}));
  }
  {
    ProofNodePtr prem = weak_r(Ex(1), ax_e_zero());
    add("exch-r", true, "", make_node(RuleTag::ExchR, Sequent{{}, {Ex(1), E0()}}, {prem}));
    add("exch-r", false, "rule-shape",
        make_node(RuleTag::ExchR, Sequent{{}, {Ex(2), E0()}}, {prem}));
  }

  // neg-l / neg-r
  add("neg-l", true, "",
      make_node(RuleTag::NegL, Sequent{{f_neg(le0x), le0x}, {}}, {idn(le0x)}));
  add("neg-l", false, "rule-shape",
      make_node(RuleTag::NegL, Sequent{{le0x, le0x}, {}}, {idn(le0x)}));
  add("neg-r", true, "",
      make_node(RuleTag::NegR,
                Sequent{{f_e(t_var(1)), f_e(t_var(2))}, {le01, f_neg(le01)}}, {idn(le01)}));
  add("neg-r", false, "rule-shape",
      make_node(RuleTag::NegR, Sequent{{f_e(t_var(1))}, {le01, f_neg(le01)}}, {idn(le01)}));

  // and-l1 / and-l2 / and-r
  add("and-l1", true, "",
      make_node(RuleTag::AndL1, Sequent{{f_and(le0x, eq00)}, {le0x}}, {idn(le0x)}));
  add("and-l1", false, "rule-shape",
      make_node(RuleTag::AndL1, Sequent{{f_and(le0x, eq00)}, {eq00}}, {idn(eq00)}));
  add("and-l2", true, "",
      make_node(RuleTag::AndL2, Sequent{{f_and(eq00, le0x)}, {le0x}}, {idn(le0x)}));
  add("and-l2", false, "rule-shape",
      make_node(RuleTag::AndL2, Sequent{{f_and(eq00, le0x)}, {eq00}}, {idn(eq00)}));
  add("and-r", true, "",
      make_node(RuleTag::AndR, Sequent{{le0x}, {f_and(le0x, le0x)}}, {idn(le0x), idn(le0x)}));
  add("and-r", false, "premise-count",
      make_node(RuleTag::AndR, Sequent{{le0x}, {f_and(le0x, le0x)}}, {idn(le0x)}));

  // or-l / or-r1 / or-r2
  add("or-l", true, "",
      make_node(RuleTag::OrL, Sequent{{f_or(le0x, le0x)}, {le0x}}, {idn(le0x), idn(le0x)}));
  add("or-l", false, "rule-shape",
      make_node(RuleTag::OrL, Sequent{{f_or(eq00, le0x)}, {le0x}}, {idn(le0x), idn(le0x)}));
  add("or-r1", true, "",
      make_node(RuleTag::OrR1, Sequent{{le0x}, {f_or(le0x, eq00)}}, {idn(le0x)}));
  add("or-r1", false, "rule-shape",
      make_node(RuleTag::OrR1, Sequent{{le0x}, {f_or(eq00, le0x)}}, {idn(le0x)}));
  add("or-r2", true, "",
      make_node(RuleTag::OrR2, Sequent{{le0x}, {f_or(eq00, le0x)}}, {idn(le0x)}));
  add("or-r2", false, "rule-shape",
      make_node(RuleTag::OrR2, Sequent{{le0x}, {f_or(le0x, eq00)}}, {idn(le0x)}));

  // all-l
  {
    const FormulaPtr at_zero = f_le(t_zero(), len2);
    const FormulaPtr q = f_all(4, len2, f_le(t_var(4), len2));
    add("all-l", true, "",
        make_node(RuleTag::AllL, Sequent{{f_le(t_zero(), len2), q}, {at_zero}}, {idn(at_zero)},
                  "", {{4, t_zero()}}));
    add("all-l", false, "instantiation-mismatch",
        make_node(RuleTag::AllL, Sequent{{f_le(t_s1(t_zero()), len2), q}, {at_zero}},
                  {idn(at_zero)}));
  }

  // all-r
  {
    const FormulaPtr leaf = f_le(t_var(5), len2);
    const FormulaPtr q = f_all(4, len2, f_le(t_var(4), len2));
    add("all-r", true, "",
        make_node(RuleTag::AllR, Sequent{{f_e(len2)}, {q}}, {idn(leaf)}));
    // Eigenvariable x5 occurs in the conclusion's context.
    ProofNodePtr inner =
        make_node(RuleTag::ExchL, Sequent{{leaf, f_le(t_zero(), t_var(5))}, {leaf}},
                  {weak_l(f_le(t_zero(), t_var(5)), idn(leaf))});
    add("all-r", false, "eigenvariable",
        make_node(RuleTag::AllR, Sequent{{f_e(len2), f_le(t_zero(), t_var(5))}, {q}}, {inner}));
  }

  // ex-l
  {
    const FormulaPtr body_at_eigen = f_all(4, len1, f_le(t_var(4), t_var(5)));
    const FormulaPtr q = f_ex(6, t_zero(), f_all(4, len1, f_le(t_var(4), t_var(6))));
    ProofNodePtr w2 =
        weak_l(f_le(t_var(5), t_zero()), weak_l(body_at_eigen, ax_e_zero()));
    ProofNodePtr exl = make_node(RuleTag::ExL, Sequent{{q}, {E0()}}, {w2});
    add("ex-l", true, "", exl);
    // The eigenvariable escapes into a weakening above the introduction.
    add("ex-l", false, "free-var-normal-form", weak_l(f_le(t_zero(), t_var(5)), exl));
  }

  // ex-r
  {
    const FormulaPtr leaf = f_le(t_var(5), len1);
    ProofNodePtr allr = make_node(
        RuleTag::AllR, Sequent{{f_e(len1)}, {f_all(4, len1, f_le(t_var(4), len1))}}, {idn(leaf)});
    const FormulaPtr q = f_ex(6, two, f_all(4, len1, f_le(t_var(4), t_var(6))));
    add("ex-r", true, "",
        make_node(RuleTag::ExR, Sequent{{f_le(len1, two), f_e(len1)}, {q}}, {allr}, "",
                  {{6, len1}}));
    const FormulaPtr q_one = f_ex(6, one, f_all(4, len1, f_le(t_var(4), t_var(6))));
    add("ex-r", false, "instantiation-mismatch",
        make_node(RuleTag::ExR, Sequent{{f_le(len1, two), f_e(len1)}, {q_one}}, {allr}));
  }

  // cut
  add("cut", true, "", make_node(RuleTag::Cut, Sequent{{}, {E0()}}, {ax_e_zero(), idn(E0())}));
  add("cut", false, "rule-shape",
      make_node(RuleTag::Cut, Sequent{{}, {Ex(1)}}, {ax_e_zero(), idn(Ex(1))}));
}

void add_extra_entries(std::vector<CorpusEntry>& out) {
  // A plain inequality fact: E x1 -> 0 <= x1.
  out.push_back(entry("ineq_axiom.s02e", "extra", "le-zero-instance", true, "",
                      axf("le-zero", Sequent{{Ex(1)}, {f_le(t_zero(), t_var(1))}})));

  // A 12-node proof mixing connective, structural and cut steps.
  {
    const FormulaPtr le0x = f_le(t_zero(), t_var(1));
    const FormulaPtr eqx1 = f_eq(t_var(1), t_var(1));
    const FormulaPtr eqx2 = f_eq(t_var(2), t_var(2));
    const FormulaPtr eq00 = f_eq(t_zero(), t_zero());
    const FormulaPtr conj = f_and(le0x, le0x);
    const FormulaPtr disj = f_or(conj, eq00);

    ProofNodePtr a3 =
        make_node(RuleTag::AndR, Sequent{{le0x}, {conj}}, {idn(le0x), idn(le0x)});
    ProofNodePtr a4 = weak_l(Ex(2), a3);
    ProofNodePtr a5 = make_node(RuleTag::ExchL, Sequent{{le0x, Ex(2)}, {conj}}, {a4});
    ProofNodePtr a6 = weak_r(eqx1, a5);
    ProofNodePtr a7 =
        make_node(RuleTag::ExchR, Sequent{{le0x, Ex(2)}, {eqx1, conj}}, {a6});
    ProofNodePtr a8 = make_node(RuleTag::OrR1, Sequent{{le0x, Ex(2)}, {eqx1, disj}}, {a7});
    ProofNodePtr a9 = weak_l(eqx2, a8);
    ProofNodePtr a10 = weak_l(eqx2, a9);
    ProofNodePtr a11 = make_node(RuleTag::ContrL, a9->concl, {a10});
    ProofNodePtr a12 = make_node(
        RuleTag::ExchL, Sequent{{eqx2, Ex(2), le0x}, {eqx1, disj}}, {a11});
    out.push_back(entry("showcase_12node.s02e", "extra", "showcase", true, "", a12));
  }

  // A weakening introducing a negated convergence literal, outside the
  // permitted formula discipline.
  out.push_back(entry("discipline_bad.s02e", "extra", "negated-convergence", false,
                      "not-one-form", weak_l(f_neg(Ex(1)), ax_e_zero())));
}

}  // namespace

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  add_axiom_entries(out);
  add_rule_entries(out);
  add_extra_entries(out);
  return out;
}

std::string validate_corpus_entry(const CorpusEntry& e) {
  ProofNodePtr p;
  try {
    p = parse_proof(e.text);
  } catch (const ParseError& err) {
    return e.file + ": does not parse: " + err.what();
  }
  const CheckResult r = check_proof(p);
  if (e.expect == "accept") {
    if (!r.ok) {
      return e.file + ": expected acceptance, got " +
             std::string(check_error_category_name(r.category)) + ": " + r.message;
    }
    return "";
  }
  if (r.ok) return e.file + ": expected rejection, but the proof was accepted";
  if (check_error_category_name(r.category) != e.category) {
    return e.file + ": expected category " + e.category + ", got " +
           check_error_category_name(r.category) + " (" + r.message + ")";
  }
  return "";
}

void write_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  const std::vector<CorpusEntry> entries = build_corpus();
  for (const CorpusEntry& e : entries) {
    const std::string problem = validate_corpus_entry(e);
    if (!problem.empty()) throw std::runtime_error("corpus validation failed: " + problem);
  }
  fs::create_directories(dir);
  json manifest = json::array();
  for (const CorpusEntry& e : entries) {
    std::ofstream f(fs::path(dir) / e.file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + e.file);
    f << e.text;
    json m{{"file", e.file}, {"kind", e.kind}, {"name", e.name}, {"expect", e.expect}};
    if (!e.category.empty()) m["category"] = e.category;
    manifest.push_back(std::move(m));
  }
  std::ofstream mf(fs::path(dir) / "manifest.json", std::ios::binary);
  if (!mf) throw std::runtime_error("cannot write manifest.json");
  mf << manifest.dump(2) << "\n";
}

}  // namespace s02e
