#include <iostream>

#include "CLI11.hpp"
#include "hsegal/errors.hpp"
#include "hsegal/report.hpp"

using namespace hsegal;

int main(int argc, char** argv) {
  CLI::App app{"Higher Segal checks for finite simplicial sets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

  AssocCubeArgs assoc;
  auto* c_assoc = app.add_subcommand("assoc-cube", "Associator cube A_n");
  c_assoc->add_option("--n", assoc.n)->required();
  c_assoc->add_flag("--check-unique", assoc.check_unique);
  c_assoc->add_flag("--boundary", assoc.boundary);

  HcombArgs hc;
  int assoc_n = 0;
  auto* c_hcomb = app.add_subcommand("hcomb", "H_comb of a monotone map, or the positions of corr_cube(A_n)");
  c_hcomb->add_option("--src", hc.src);
  c_hcomb->add_option("--tgt", hc.tgt);
  c_hcomb->add_option("--values", hc.values)->delimiter(',');
  auto* o_assoc = c_hcomb->add_option("--assoc", assoc_n);

  SegalArgs sg;
  int dim_bound = 0;
  auto* c_segal = app.add_subcommand("segal-check", "d-Segal checks by triangulations and by cubes");
  c_segal->add_option("--input", sg.input)->required();
  c_segal->add_option("--d", sg.d)->required();
  c_segal->add_option("--nmax", sg.n_max)->required();
  c_segal->add_option("--method", sg.method);
  c_segal->add_option("--mode", sg.mode);
  auto* o_db = c_segal->add_option("--dim-bound", dim_bound, "nerve truncation for monoid and category inputs");

  HallArgs hall;
  std::string oracle;
  auto* c_hall = app.add_subcommand("hall", "Hall algebra structure constants");
  c_hall->add_option("--input", hall.input)->required();
  auto* o_oracle = c_hall->add_option("--oracle", oracle, "monoid file to compare against");

  GaleArgs gale;
  auto* c_gale = app.add_subcommand("gale", "Gale evenness triangulations of C_d(n)");
  c_gale->add_option("--n", gale.n)->required();
  c_gale->add_option("--d", gale.d)->required();
  c_gale->add_flag("--geometry", gale.geometry);
  c_gale->add_option("--samples", gale.samples);
  c_gale->add_option("--seed", gale.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Report r;
    if (c_assoc->parsed()) {
      r = cmd_assoc_cube(assoc);
    } else if (c_hcomb->parsed()) {
      if (*o_assoc) hc.assoc = assoc_n;
      r = cmd_hcomb(hc);
    } else if (c_segal->parsed()) {
      if (*o_db) sg.dim_bound = dim_bound;
      r = cmd_segal_check(sg);
    } else if (c_hall->parsed()) {
      if (*o_oracle) hall.oracle = oracle;
      r = cmd_hall(hall);
    } else {
      r = cmd_gale(gale);
    }
    std::cout << (format == "machine" ? render_machine(r) : render_human(r));
    return r.exit_code();
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
