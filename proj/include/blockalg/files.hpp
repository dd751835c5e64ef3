#pragma once

#include <filesystem>

#include "blockalg/derivation.hpp"
#include "blockalg/two_local.hpp"

namespace blockalg {

// Derivation table file (UTF-8, LF, '#' comment lines):
//
//   window <alpha_min> <alpha_max> <i_max>
//   L[b,j] -> <element-expr>        # one line per window index
//
// The assignments must cover the declared window exactly; a missing index
// raises MissingAssignment and duplicates or strays raise FileFormatError.
DerivationTable load_derivation_table(const std::filesystem::path& path);

// Witness family file (a minimal TOML subset: `key = "value"` lines and
// [[perturbation]] sections, '#' comment lines):
//
//   hidden = "<derivation-spec>"
//
//   [[perturbation]]
//   x = "<element-expr>"
//   y = "<element-expr>"
//   kernel = "<derivation-spec>"
//   coeff = "<scalar>"
//
// Pair matching is by canonical form, so two spellings of the same element
// select the same pair. With validate_kernels (the default), every kernel
// must annihilate both members of its pair or the load throws
// KernelNotAnnihilating.
WitnessFamilySpec load_witness_family(const std::filesystem::path& path,
                                      bool validate_kernels = true);

}  // namespace blockalg
