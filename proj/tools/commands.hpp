#pragma once

#include "schemespec.hpp"

#include <upsub/mask.hpp>

#include <string>

namespace upsub::tool {

/// Each command returns the process exit code. Cap overruns and assumption
/// violations escape as exceptions; main maps them onto the exit contract.
int cmd_run(const SchemeSpec& spec);
int cmd_support(const SchemeSpec& spec);
int cmd_verify(const SchemeSpec& spec);
int cmd_classify(const SchemeSpec& spec);
int cmd_mask_info(const std::string& mask_path);

} // namespace upsub::tool
