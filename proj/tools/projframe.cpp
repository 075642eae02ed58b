// projframe: command-line front end. Results are JSON on stdout with a
// "status" field; a one-line summary goes to stderr.
// Exit codes: 0 success, 1 validation or precondition failure, 2 I/O or schema error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "projframe/io.hpp"
#include "projframe/projframe.hpp"

namespace {

using namespace projframe;
using io::json;
using io::to_json;

ToleranceConfig g_tol;

void apply_tolerance(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw Error(ErrorKind::schema_error, "tolerance override must be name=value: '" + spec + "'");
  const std::string name = spec.substr(0, eq);
  double value = 0;
  try {
    value = std::stod(spec.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::schema_error, "tolerance value is not a number: '" + spec + "'");
  }
  if (!(value > 0)) throw Error(ErrorKind::schema_error, "tolerance must be positive: '" + spec + "'");
  if (!g_tol.set(name, value)) throw Error(ErrorKind::schema_error, "unknown tolerance '" + name + "'");
}

void apply_env_tolerances() {
  const char* env = std::getenv("PROJFRAME_TOL");
  if (!env) return;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) apply_tolerance(item);
}

/// A reference is a JSON file when the path exists, otherwise a built-in name.
json resolve(const std::string& ref) {
  if (std::filesystem::exists(ref)) return io::load_file(ref);
  return json(ref);
}

CocyclePtr load_cocycle(const std::string& ref) { return io::cocycle_from_json(resolve(ref)); }

IrreducibleSetPtr load_irrset(const std::string& ref, const CocyclePtr& c) {
  if (ref.empty()) return default_irreducibles(c);
  IrreducibleSetPtr r = io::irrset_from_json(resolve(ref), c);
  require(validate_complete_set(*r, g_tol), ErrorKind::rep_invalid);
  return r;
}

struct Common {
  std::string cocycle;
  std::string irrset;
  std::string matrix;
};

GAlphaMatrix load_matrix(const Common& o) {
  if (o.matrix.empty()) throw Error(ErrorKind::schema_error, "--matrix FILE is required");
  const CocyclePtr fallback = o.cocycle.empty() ? nullptr : load_cocycle(o.cocycle);
  return io::galpha_from_json(io::load_file(o.matrix), fallback);
}

/// Function on G from a file holding either an array or a galpha-style object.
std::pair<ComplexVector, CocyclePtr> load_function(const std::string& path, const Common& o) {
  const json j = io::load_file(path);
  CocyclePtr c = o.cocycle.empty() ? nullptr : load_cocycle(o.cocycle);
  if (j.is_object() && j.contains("cocycle") && !c) c = io::cocycle_from_json(j.at("cocycle"));
  if (!c) throw Error(ErrorKind::schema_error, "no cocycle given: pass --cocycle or include \"cocycle\" in the file");
  return {io::function_from_json(j), c};
}

json ok(json body) {
  body["status"] = "ok";
  return body;
}

void emit(const json& j, const std::string& summary) {
  std::cout << j.dump(2) << "\n";
  if (!summary.empty()) std::cerr << summary << "\n";
}

std::string str(Complex z) {
  std::ostringstream s;
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

json rank_json(const RankCertificate& cert) {
  json blocks = json::array();
  for (const auto& b : cert.blocks)
    blocks.push_back({{"rho", b.label}, {"dim", b.dim}, {"rank", b.rank}, {"singular_values", b.singular_values}});
  return {{"rank", cert.rank}, {"cutoff", cert.cutoff}, {"blocks", blocks}};
}

json tight_json(const TightnessReport& t) {
  json blocks = json::array();
  for (const auto& b : t.blocks)
    blocks.push_back({{"rho", b.label},
                      {"idempotency_defect", b.idempotency_defect},
                      {"hermitian_defect", b.hermitian_defect},
                      {"is_projection", b.is_projection}});
  return {{"tight", t.tight}, {"blocks", blocks}, {"failing", t.failing}};
}

json class_json(const FrameClass& c) {
  json details = json::array();
  for (const auto& d : c.details) {
    json x{{"rho", d.label}, {"dim", d.dim},           {"rank", d.rank},
           {"is_zero", d.is_zero}, {"is_projection", d.is_projection}, {"is_scalar", d.is_scalar}};
    if (d.is_scalar) x["scalar"] = to_json(d.scalar);
    details.push_back(std::move(x));
  }
  return {{"tag", c.tag},       {"irreducible", c.irreducible}, {"homogeneous", c.homogeneous}, {"central", c.central},
          {"harmonic", c.harmonic}, {"tight", c.tight},           {"details", details}};
}

std::vector<std::size_t> parse_subset(const std::string& labels, const IrreducibleSet& r) {
  std::vector<std::size_t> out;
  std::stringstream ss(labels);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto idx = r.find(item);
    if (!idx) throw Error(ErrorKind::invalid_input, "unknown irreducible label '" + item + "'");
    out.push_back(*idx);
  }
  return out;
}

json example_dataset(const std::string& which) {
  IrreducibleSetPtr r;
  std::vector<ProjectiveRep> extra;
  if (which == "klein") {
    r = klein_irreducibles();
    extra.push_back(klein_rep_tilde(r->cocycle_ptr()));
  } else if (which == "d8") {
    r = dihedral8_irreducibles();
  } else {
    throw Error(ErrorKind::invalid_input, "examples: choose klein or d8");
  }
  json reps = json::array();
  for (const auto& rho : *r) reps.push_back(to_json(rho, false));
  for (const auto& rho : extra) reps.push_back(to_json(rho, false));
  const DiagonalizerE e = build_E(r);
  json e_exact = json::array();
  for (const auto& row : e.exact()->entries) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(to_json(x));
    e_exact.push_back(std::move(jr));
  }
  json scale = json::array();
  for (const auto& s : e.exact()->column_scale_sq) scale.push_back({s.num, s.den});
  json trivial_e;
  if (which == "klein") {
    const DiagonalizerE et = build_E(abelian_trivial_irreducibles(make_klein_four()));
    trivial_e = to_json(et.matrix());
  }
  json out{{"group", to_json(r->group())},
           {"cocycle", to_json(r->cocycle())},
           {"irreducibles", reps},
           {"E", {{"entries", e_exact}, {"column_scale_squared", scale}, {"matrix", to_json(e.matrix())}}}};
  if (!trivial_e.is_null()) out["E_trivial_cocycle"] = trivial_e;
  return ok(out);
}

int run(int argc, char** argv) {
  CLI::App app{"Projective group frames: (G,alpha)-matrices, alpha-Fourier transforms, tight frames"};
  app.require_subcommand(1);
  std::vector<std::string> tol_overrides;
  app.add_option("--tol", tol_overrides, "Override a tolerance, name=value (repeatable)");

  Common o;
  auto add_setting = [&](CLI::App* sub) {
    sub->add_option("--cocycle", o.cocycle, "Cocycle file or built-in name (klein, d8, trivial:<group>)");
    sub->add_option("--irrset", o.irrset, "Irreducible set file (default: built-in set for the cocycle)");
  };
  auto add_matrix = [&](CLI::App* sub) {
    add_setting(sub);
    sub->add_option("--matrix", o.matrix, "(G,alpha)-matrix file {\"cocycle\", \"nu\"}")->required();
  };

  std::string kind, file, f_file, mu_file, image_file, rep_ref, v_file, central, which;
  bool variant = false, psd = false, ordinary = false;

  auto* validate = app.add_subcommand("validate", "Validate a group, cocycle, representation or irreducible set");
  validate->add_option("kind", kind, "group|cocycle|rep|irrset")->required()->check(CLI::IsMember({"group", "cocycle", "rep", "irrset"}));
  validate->add_option("file", file, "JSON file")->required();

  auto* regular = app.add_subcommand("regular-rep", "Regular alpha-representation");
  regular->add_option("--cocycle", o.cocycle, "Cocycle file or built-in name")->required();

  auto* character_cmd = app.add_subcommand("character", "alpha-character of a representation");
  character_cmd->add_option("--rep", rep_ref, "Representation file or built-in name")->required();

  auto* transform = app.add_subcommand("transform", "alpha-Fourier transform of a function on G");
  add_setting(transform);
  transform->add_option("--f", f_file, "Function file")->required();
  transform->add_flag("--variant", variant, "Use the variant transform f -> F(f(.^{-1}))");

  auto* inv_transform = app.add_subcommand("inverse-transform", "Inverse alpha-Fourier transform");
  add_setting(inv_transform);
  inv_transform->add_option("--image", image_file, "Fourier image file {\"blocks\": [...]}")->required();
  inv_transform->add_flag("--variant", variant, "Invert the variant transform");

  auto* convolve = app.add_subcommand("convolve", "Twisted convolution nu *_alpha mu");
  add_setting(convolve);
  convolve->add_option("--nu", f_file, "Function file")->required();
  convolve->add_option("--mu", mu_file, "Function file")->required();

  auto* adjoint_cmd = app.add_subcommand("adjoint", "Star adjoint nu^{*,alpha}");
  add_matrix(adjoint_cmd);

  auto* blockdiag = app.add_subcommand("blockdiag", "Block diagonalize conj(E)* M conj(E)");
  add_matrix(blockdiag);
  blockdiag->add_flag("--ordinary", ordinary, "Use E* M E (trivial cocycle only)");

  auto* det = app.add_subcommand("det", "Determinant via the Fourier block factorization");
  add_matrix(det);

  auto* rank_cmd = app.add_subcommand("rank", "Rank with per-block certificate");
  add_matrix(rank_cmd);

  auto* gramian = app.add_subcommand("gramian", "Gramian of the orbit (rho(g) v)");
  gramian->add_option("--rep", rep_ref, "Representation file or built-in name (klein.rho, d8.rho1, ...)")->required();
  gramian->add_option("--v", v_file, "Vector file")->required();

  auto* tightcheck = app.add_subcommand("tightcheck", "Is the Gramian an orthogonal projection?");
  add_setting(tightcheck);
  tightcheck->add_option("--matrix", o.matrix, "(G,alpha)-matrix file");
  tightcheck->add_option("--central", central, "Use the central Gramian of these irreducible labels (comma separated)");

  auto* classify_cmd = app.add_subcommand("classify", "Frame class from the Fourier coefficients");
  add_matrix(classify_cmd);

  auto* construct = app.add_subcommand("construct", "Rebuild an orbit (v, rho) from a Gramian");
  add_matrix(construct);
  construct->add_flag("--psd", psd, "Accept any positive semidefinite Gramian");

  auto* examples = app.add_subcommand("examples", "Dump a built-in dataset");
  examples->add_option("name", which, "klein|d8")->required()->check(CLI::IsMember({"klein", "d8"}));

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    emit({{"status", "error"}, {"kind", "schema-error"}, {"message", e.what()}}, "");
    return 2;
  }

  apply_env_tolerances();
  for (const auto& t : tol_overrides) apply_tolerance(t);

  if (*validate) {
    if (kind == "group") {
      const GroupPtr g = io::group_from_json(io::load_file(file));
      emit(ok({{"valid", true}, {"order", g->order()}, {"abelian", g->is_abelian()}, {"classes", conjugacy_classes(*g).size()}}),
           "valid group of order " + std::to_string(g->order()));
      return 0;
    }
    ValidationReport rep;
    json extra;
    if (kind == "cocycle") {
      const CocyclePtr c = io::cocycle_from_json(io::load_file(file));
      rep = validate_cocycle(*c, g_tol);
      extra = {{"exact", c->is_exact()}, {"unitary", c->is_unitary()}};
      if (rep.ok) extra["alpha_regular_classes"] = count_alpha_regular_classes(*c, g_tol);
    } else if (kind == "rep") {
      const ProjectiveRep r = io::rep_from_json(io::load_file(file));
      rep = validate_rep(r, g_tol);
      extra = {{"dim", r.dim()}, {"unitary", r.is_unitary()}};
      if (rep.ok && r.is_unitary()) extra["irreducible"] = is_irreducible(r, g_tol);
    } else {
      const IrreducibleSetPtr r = io::irrset_from_json(io::load_file(file));
      rep = validate_complete_set(*r, g_tol);
      extra = {{"size", r->size()}, {"labels", r->labels()}};
    }
    json out = {{"status", rep.ok ? "ok" : "invalid"}, {"valid", rep.ok}, {"report", to_json(rep)}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    emit(out, rep.message);
    return rep.ok ? 0 : 1;
  }

  if (*regular) {
    const ProjectiveRep r = regular_rep(load_cocycle(o.cocycle));
    emit(ok({{"rep", to_json(r)}, {"report", to_json(validate_rep(r, g_tol))}}), "regular representation of dimension " + std::to_string(r.dim()));
    return 0;
  }

  if (*character_cmd) {
    const ProjectiveRep r = io::rep_from_json(resolve(rep_ref));
    const AlphaCharacter chi = character(r);
    json out{{"label", r.label()}, {"dim", chi.dim}, {"values", to_json(chi.values)}};
    if (r.is_unitary()) out["irreducible"] = is_irreducible(r, g_tol);
    emit(ok(out), "character of " + r.label());
    return 0;
  }

  if (*transform) {
    auto [f, c] = load_function(f_file, o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, c);
    const FourierImage img = variant ? forward_variant(f, r) : forward(f, r);
    emit(ok(to_json(img)), std::string(variant ? "variant " : "") + "Fourier transform over " + std::to_string(r->size()) + " irreducibles");
    return 0;
  }

  if (*inv_transform) {
    const json j = io::load_file(image_file);
    CocyclePtr c = o.cocycle.empty() ? nullptr : load_cocycle(o.cocycle);
    if (!c && j.contains("cocycle")) c = io::cocycle_from_json(j.at("cocycle"));
    if (!c) throw Error(ErrorKind::schema_error, "no cocycle given: pass --cocycle or include \"cocycle\" in the file");
    const IrreducibleSetPtr r = load_irrset(o.irrset, c);
    const FourierImage img = io::image_from_json(j, r);
    emit(ok({{"f", to_json(variant ? inverse_variant(img) : inverse(img))}}), "inverse transform");
    return 0;
  }

  if (*convolve) {
    auto [nu, c] = load_function(f_file, o);
    auto [mu, c2] = load_function(mu_file, o);
    if (!c->same_values(*c2)) throw Error(ErrorKind::group_mismatch, "operands use different cocycles");
    emit(ok({{"nu", to_json(alpha_convolve(nu, mu, *c))}}), "twisted convolution");
    return 0;
  }

  if (*adjoint_cmd) {
    const GAlphaMatrix m = load_matrix(o);
    emit(ok({{"nu", to_json(star_adjoint(m.nu(), m.cocycle()))}}), "star adjoint");
    return 0;
  }

  if (*blockdiag) {
    const GAlphaMatrix m = load_matrix(o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, m.cocycle_ptr());
    const DiagonalizerE e = build_E(r);
    const BlockDiagonalization bd = ordinary ? ordinary_block_diagonalize(m, e, g_tol) : block_diagonalize(m, e, g_tol);
    json blocks = json::array();
    for (const auto& b : bd.blocks) blocks.push_back({{"rho", b.label}, {"k", b.k}, {"matrix", to_json(b.matrix)}});
    emit(ok({{"blocks", blocks}, {"off_block_residual", bd.off_block_residual}, {"norm", bd.scale}, {"conjugation", ordinary ? "E* M E" : "conj(E)* M conj(E)"}}),
         std::to_string(bd.blocks.size()) + " diagonal blocks, off-block residual " + std::to_string(bd.off_block_residual));
    return 0;
  }

  if (*det) {
    const GAlphaMatrix m = load_matrix(o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, m.cocycle_ptr());
    const FourierImage img = forward(m.nu(), r);
    json factors = json::array();
    for (std::size_t i = 0; i < img.size(); ++i)
      factors.push_back({{"rho", (*r)[i].label()}, {"dim", (*r)[i].dim()}, {"block_determinant", to_json(determinant_dense(img[i]))}});
    const Complex d = determinant(m, r);
    emit(ok({{"determinant", to_json(d)}, {"factors", factors}}), "det = " + str(d));
    return 0;
  }

  if (*rank_cmd) {
    const GAlphaMatrix m = load_matrix(o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, m.cocycle_ptr());
    const RankCertificate cert = rank(m, r, g_tol);
    emit(ok(rank_json(cert)), "rank " + std::to_string(cert.rank));
    return 0;
  }

  if (*gramian) {
    const ProjectiveRep rep = io::rep_from_json(resolve(rep_ref));
    const ComplexVector v = io::function_from_json(io::load_file(v_file));
    const FrameGramian g = gramian_of_orbit(rep, v);
    emit(ok({{"matrix", to_json(g.matrix)}, {"source", g.source}}), "Gramian of the orbit of " + rep.label());
    return 0;
  }

  if (*tightcheck) {
    std::optional<FrameGramian> g;
    IrreducibleSetPtr r;
    if (!central.empty()) {
      if (o.cocycle.empty()) throw Error(ErrorKind::schema_error, "--central needs --cocycle");
      r = load_irrset(o.irrset, load_cocycle(o.cocycle));
      g = central_gramian(r, parse_subset(central, *r));
    } else {
      const GAlphaMatrix m = load_matrix(o);
      r = load_irrset(o.irrset, m.cocycle_ptr());
      g = FrameGramian{m, "input"};
    }
    const TightnessReport t = is_tight(*g, r, g_tol);
    emit(ok(tight_json(t)), t.tight ? "tight" : "not tight");
    return 0;
  }

  if (*classify_cmd) {
    const GAlphaMatrix m = load_matrix(o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, m.cocycle_ptr());
    const FrameClass c = classify(FrameGramian{m, "input"}, r, g_tol);
    emit(ok(class_json(c)), "class " + c.tag);
    return 0;
  }

  if (*construct) {
    const GAlphaMatrix m = load_matrix(o);
    const IrreducibleSetPtr r = load_irrset(o.irrset, m.cocycle_ptr());
    const FrameGramian g{m, "input"};
    const Construction c = psd ? construct_from_psd(g, r, g_tol) : construct_frame(g, r, g_tol);
    json out{{"frame", to_json(c.frame)}, {"dimension", c.frame.dimension()}, {"residual", c.residual}, {"scale", c.scale},
             {"v", to_json(c.v)}, {"rebuilt", to_json(c.rebuilt.matrix)}};
    emit(ok(out), "frame of dimension " + std::to_string(c.frame.dimension()) + ", residual " + std::to_string(c.residual));
    return 0;
  }

  if (*examples) {
    emit(example_dataset(which), which + " dataset");
    return 0;
  }

  if (*selftest) {
    const auto results = acceptance::run_all();
    json crit = json::array();
    bool all = true;
    for (const auto& res : results) {
      std::cerr << acceptance::format(res) << "\n";
      crit.push_back({{"id", res.id}, {"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
      all = all && res.pass;
    }
    std::cout << json{{"status", all ? "ok" : "failed"}, {"criteria", crit}}.dump(2) << "\n";
    return all ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    const bool io_kind = e.kind() == ErrorKind::schema_error || e.kind() == ErrorKind::io_error;
    json out{{"status", "error"}, {"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.witness().empty()) out["witness"] = e.witness();
    std::cout << out.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return io_kind ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cout << json{{"status", "error"}, {"kind", "schema-error"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"status", "error"}, {"kind", "internal"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
