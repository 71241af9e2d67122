#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zcross/builders.hpp"
#include "zcross/condense.hpp"
#include "zcross/equivariant.hpp"
#include "zcross/io.hpp"

using namespace zcross;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

int emit(const Json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? kOk : kViolations;
}

int cmd_discriminant(const std::string& gram) {
  Lattice l(io::matrix_from(io::load(gram), "gram"));
  DiscPipeline p(l);
  Json lifts = Json::array();
  for (std::int64_t a = 0; a < p.size(); ++a) {
    Json v = Json::array();
    for (const auto& x : p.lift(a)) v.push_back(to_string(x));
    lifts.push_back(v);
  }
  Json j{{"rank", l.rank()},
         {"det", l.det()},
         {"strongly_even", l.is_strongly_even()},
         {"form", io::to_json(static_cast<const QuadForm&>(p.disc()))},
         {"signature", gauss_signature(p.disc())},
         {"lifts", lifts}};
  return emit(j, true);
}

int cmd_gauss(const std::string& form) {
  DiscForm d(io::form_from(io::load(form)));
  return emit(Json{{"signature", gauss_signature(d)}}, true);
}

int cmd_condense(const std::string& form, const std::string& iso) {
  QuadForm q = io::form_from(io::load(form));
  DiscForm d(q);
  Subgroup h = io::subgroup_from(q.group(), io::load(iso));
  CondensedPointed out = condense_pointed(condensation_input(ambient_from_form(q), h));
  Report rep = check_cocycle(out.braided);
  IsotropicCondensation ref = isotropic_condense(d, h);
  QuadForm local = extract_q(out.braided);
  bool same = true;
  for (std::int64_t a = 0; a < local.group().order(); ++a)
    if (local.value(a) != d.value(out.local.section[static_cast<std::size_t>(a)])) same = false;
  bool sig = gauss_signature(DiscForm(local)) == gauss_signature(d);
  Json j{{"modules", io::to_json(out.modules, q.group())},
         {"local", io::to_json(out.local, q.group())},
         {"local_form", io::to_json(local)},
         {"induced_form", io::to_json(static_cast<const QuadForm&>(ref.induced))},
         {"form_matches", same},
         {"signature_preserved", sig},
         {"cocycle", io::to_json(out.braided)},
         {"check", io::to_json(rep)}};
  return emit(j, rep.ok() && same && sig);
}

int cmd_ty(const std::string& form, int eps, bool negative_ribbon) {
  DiscForm d(io::form_from(io::load(form)));
  return emit(io::to_json(build_ty({d, eps, negative_ribbon})), true);
}

int cmd_glm(const std::string& gram, int eps, bool negative_ribbon) {
  Lattice l(io::matrix_from(io::load(gram), "gram"));
  GLMResult r = build_glm_full(l, eps, negative_ribbon);
  Json j = io::to_json(r.cat);
  j["alpha_sq"] = r.alpha_sq.str();
  j["alpha_sq_expected"] = r.alpha_sq_expected.str();
  return emit(j, true);
}

int cmd_epsilon(std::int64_t d0, std::int64_t order) { return emit(Json{{"epsilon", epsilon_from_geometry(d0, order)}}, true); }

int cmd_equivariantise(const std::string& cat) {
  CrossedCat c = io::crossed_from(io::load(cat));
  EquivariantCat e = equivariant_fusion(c);
  Report ring = check_fusion_ring(c, e);
  EqModularData md = modular_data(e);
  Json j = io::to_json(e, md);
  j["fingerprint"] = io::to_json(fingerprint(c, e));
  j["checks"] = Json::array({io::to_json(ring), io::to_json(e.ribbon), io::to_json(md.checks)});
  return emit(j, ring.ok() && e.ribbon.ok() && md.checks.ok());
}

int cmd_verify(const std::string& cat, std::uint64_t budget, unsigned threads) {
  CrossedCat c = io::crossed_from(io::load(cat));
  Report r = verify(c, {budget, threads});
  QuantumDims qd = quantum_dims(c);
  Json dims = Json::array();
  for (const auto& d : qd.dims) dims.push_back(io::to_json(d));
  Json j = io::to_json(r);
  j["dims"] = dims;
  j["pseudo_unitary"] = qd.pseudo_unitary;
  return emit(j, r.ok());
}

int cmd_ty_condense(const std::string& cat, const std::string& iso) {
  CrossedCat c = io::crossed_from(io::load(cat));
  Subgroup h = io::subgroup_from(c.group, io::load(iso));
  TyCondensation t = ty_condense(c, h);
  Json j = io::to_json(t.cat);
  j["local"] = io::to_json(t.local, c.group);
  j["alpha_sq"] = t.alpha_sq.str();
  j["alpha_sq_expected"] = t.alpha_sq_expected.str();
  j["alpha_consistent"] = t.alpha_consistent;
  return emit(j, t.alpha_consistent);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of pointed braided categories and their Z/2-crossed extensions"};
  app.require_subcommand(1);
  std::string gram, form, iso, cat;
  int eps = 1;
  bool negative_ribbon = false;
  std::int64_t d0 = 0, order = 1;
  std::uint64_t budget = 0;
  unsigned threads = 1;

  auto* disc = app.add_subcommand("discriminant", "discriminant form of an even lattice");
  disc->add_option("--gram", gram, "Gram matrix (JSON or file)")->required();
  auto* gauss = app.add_subcommand("gauss", "signature mod 8 from the Gauss sum");
  gauss->add_option("--form", form, "quadratic form (JSON or file)")->required();
  auto* cond = app.add_subcommand("condense", "condensation of a pointed category by an isotropic subgroup");
  cond->add_option("--form", form, "quadratic form (JSON or file)")->required();
  cond->add_option("--isotropic", iso, "generators of the isotropic subgroup")->required();
  auto* ty = app.add_subcommand("ty", "Tambara-Yamagami crossed extension of an odd discriminant form");
  ty->add_option("--form", form, "quadratic form (JSON or file)")->required();
  ty->add_option("--eps", eps, "sign +1 or -1")->required();
  ty->add_flag("--negative-ribbon", negative_ribbon, "use the negative ribbon branch");
  auto* glm = app.add_subcommand("glm", "crossed extension of an even discriminant form from a strongly even lattice");
  glm->add_option("--gram", gram, "Gram matrix (JSON or file)")->required();
  glm->add_option("--eps", eps, "sign +1 or -1")->required();
  glm->add_flag("--negative-ribbon", negative_ribbon, "use the negative ribbon branch");
  auto* epsc = app.add_subcommand("epsilon", "sign from the fixed-point rank and the group order");
  epsc->add_option("--d0", d0, "rank of the fixed sublattice")->required();
  epsc->add_option("--gamma-order", order, "order of the discriminant group")->required();
  auto* eq = app.add_subcommand("equivariantise", "equivariantisation of a crossed category");
  eq->add_option("--cat", cat, "category (JSON or file)")->required();
  auto* ver = app.add_subcommand("verify", "exhaustive coherence verification");
  ver->add_option("--cat", cat, "category (JSON or file)")->required();
  ver->add_option("--budget", budget, "maximum number of tuples per check, 0 for all");
  ver->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  auto* tyc = app.add_subcommand("ty-condense", "condensation of a Tambara-Yamagami category");
  tyc->add_option("--cat", cat, "category (JSON or file)")->required();
  tyc->add_option("--isotropic", iso, "generators of the isotropic subgroup")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*disc) return cmd_discriminant(gram);
    if (*gauss) return cmd_gauss(form);
    if (*cond) return cmd_condense(form, iso);
    if (*ty) return cmd_ty(form, eps, negative_ribbon);
    if (*glm) return cmd_glm(gram, eps, negative_ribbon);
    if (*epsc) return cmd_epsilon(d0, order);
    if (*eq) return cmd_equivariantise(cat);
    if (*ver) return cmd_verify(cat, budget, threads);
    if (*tyc) return cmd_ty_condense(cat, iso);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    std::cout << Json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
    return kInputError;
  }
  return kInputError;
}
