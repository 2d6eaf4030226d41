// figures.hpp — Frozen parameter sets for the reference figures.
//
// Each figure id maps to a fixed bundle of parameters and grids; emitting a
// figure writes one CSV per curve (or one long-format CSV per surface) into
// the output directory. The constants here are part of the tested contract:
// golden checks and the acceptance suite read these exact datasets.

#pragma once

#include <string>
#include <vector>

#include "decolab/params.hpp"

namespace decolab {

struct FigureResult {
    std::vector<std::string> files;  // paths written, in emission order
};

const std::vector<std::string>& figure_ids();

// Throws std::invalid_argument for an unknown id.
FigureResult emit_figure(const std::string& id, const std::string& out_dir);

}  // namespace decolab
