#ifndef MIDDLECURVES_IO_HPP
#define MIDDLECURVES_IO_HPP

#include <string>
#include <vector>

#include "middlecurves/geometry.hpp"
#include "middlecurves/middle.hpp"
#include "middlecurves/reduction.hpp"

namespace middlecurves {

/// Middle-curve document: provenance references, the distance bound, and
/// the variant they were verified (or solved) under.
struct MiddleFile {
  std::vector<VertexRef> refs;
  double delta = 0.0;
  Variant variant = Variant::kUnordered;
};

/// Curve documents are JSON of the form
///   { "dimension": d, "curves": [ { "id": ..., "points": [[x, ...], ...] } ] }
/// Integral coordinates are written as JSON integers so integer instances
/// round-trip bit-exactly; all other numbers use the shortest decimal that
/// round-trips.
std::string write_curve_file(const CurveSet& curves);
CurveSet read_curve_file(const std::string& json_text);

/// { "refs": [ { "curve": id, "index": k } ], "delta": d, "variant": v }
std::string write_middle_file(const MiddleFile& middle);
MiddleFile read_middle_file(const std::string& json_text);

/// { "sequences": [ ... ], "t": t }
std::string write_scs_file(const ScsInstance& inst);
ScsInstance read_scs_file(const std::string& json_text);

/// CSV import for track-style data: one point per row as
///   curve_id,x1[,x2,...]
/// Curves appear in order of first mention; a leading header row is
/// detected by non-numeric coordinate fields and skipped.
CurveSet read_curve_csv(const std::string& csv_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace middlecurves

#endif  // MIDDLECURVES_IO_HPP
