#pragma once

#include <json.hpp>

#include "tonality/catalog.hpp"
#include "tonality/embedding.hpp"
#include "tonality/leadsheet.hpp"
#include "tonality/modes.hpp"
#include "tonality/tuning.hpp"

// Stable-key-ordered JSON views of the library's results, shared by the CLI
// and the regression tests.

namespace tonality {

using Json = nlohmann::ordered_json;

Json catalog_to_json();      // versioned export of every family and count
Json duality_to_json();
Json entry_to_json(const CatalogEntry& entry);
Json mode_to_json(const Mode& mode);
Json symbol_to_json(const ChordSymbol& symbol);
Json voicing_result_to_json(const VoicingResult& result);
Json blue_note_report_to_json(const BlueNoteReport& report);
Json cover_report_to_json(const CoverReport& report);
Json dominant_rows_to_json();
Json embedding_to_json(const Embedding& embedding);

}  // namespace tonality
