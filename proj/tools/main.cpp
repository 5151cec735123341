#include "commands.hpp"
#include "schemespec.hpp"

#include <upsub/subdivision.hpp>
#include <upsub/support.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

using namespace upsub;
using namespace upsub::tool;

int main(int argc, char** argv) {
  CLI::App app{"Non-stationary subdivision schemes: run, sample and verify"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string spec_path;
  std::string out_override;
  int levels_override = 0;
  int threads_override = 0;
  std::int64_t cap_override = 0;

  app.add_option("--spec", spec_path, "Scheme spec file (key = value lines)");
  app.add_option("--out", out_override, "Output directory, overrides the spec");
  app.add_option("--levels", levels_override, "Cascade depth, overrides the spec");
  app.add_option("--threads", threads_override, "Worker threads, overrides the spec");
  app.add_option("--cap", cap_override, "Window point cap, overrides the spec");

  auto* run = app.add_subcommand("run", "Run the cascade, write samples.csv (and heightmap.pgm in 2d)");
  auto* support = app.add_subcommand("support", "Write predicted, closed-form and empirical support");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite; exit 1 when a check fails");
  auto* classify = app.add_subcommand("classify", "Write the factor-count classification report");
  auto* info = app.add_subcommand("mask-info", "Print facts about one mask");
  std::string mask_path;
  info->add_option("mask", mask_path, "Mask to inspect: bspline:m, box3:m, or a mask file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed())
      return cmd_mask_info(mask_path);

    if (spec_path.empty()) {
      std::cerr << "error: this command needs --spec <file>\n";
      return 2;
    }
    SchemeSpec spec = parse_spec_file(spec_path);
    if (!out_override.empty())
      spec.out_dir = out_override;
    if (levels_override > 0)
      spec.levels = levels_override;
    if (threads_override > 0)
      spec.subdivision.threads = threads_override;
    if (cap_override > 0)
      spec.subdivision.window_cap = cap_override;

    if (run->parsed())
      return cmd_run(spec);
    if (support->parsed())
      return cmd_support(spec);
    if (verify->parsed())
      return cmd_verify(spec);
    if (classify->parsed())
      return cmd_classify(spec);
    std::cerr << "error: unknown subcommand\n";
    return 2;
  } catch (const WindowCapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const AssumptionViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
