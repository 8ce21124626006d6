/// Plain-text dump of a solved field triple, round-trippable bit for bit
/// (%.17g formatting). One block per field: family, storage extents, then
/// one line of values per storage column.

#pragma once

#include <string>

#include "stokesmac/stokes_solver.hpp"

namespace stokesmac {

std::string fields_to_string(const StokesFields& sol);
StokesFields fields_from_string(const std::string& text);

void dump_fields(const StokesFields& sol, const std::string& path);
StokesFields read_fields(const std::string& path);

}  // namespace stokesmac
