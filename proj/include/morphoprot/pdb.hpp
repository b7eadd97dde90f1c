#pragma once

#include <filesystem>
#include <string>

#include "morphoprot/model.hpp"

namespace morphoprot {

/// Parse PDB-format text into a model.
///
/// Fixed 1-based columns: record name 1-6, serial 7-11, atom name 13-16,
/// altLoc 17, resName 18-20, chainID 22, resSeq 23-26, x 31-38, y 39-46,
/// z 47-54 (8.3 fixed decimals). Only the first MODEL is read; records with
/// an altLoc other than blank or 'A' are skipped. HETATM records are kept
/// only when include_hetero is true.
///
/// Throws NoAtomsError when nothing parses, MalformedRecordError (with the
/// 1-based line number) when an accepted record has unparsable coordinates.
StructureModel parse_pdb(const std::string& text, bool include_hetero = false);

/// parse_pdb over a file's content; pdb_id is set from the file stem.
StructureModel load_pdb_file(const std::filesystem::path& path, bool include_hetero = false);

} // namespace morphoprot
