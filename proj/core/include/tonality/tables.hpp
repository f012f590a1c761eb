#pragma once

#include <string>

namespace tonality {

/// Text renderings of the published tables, diffable against the bundled
/// fixtures. Pitch classes are spelled with flats (Ab, Bb, ...), entries
/// within a cell sorted ascending from C.
std::string render_table1();  // harmony by whole-tone overlap
std::string render_table2();  // packing embeddings at root C
std::string render_table3();  // chord embeddings at root C
std::string render_table4();  // dominant modes and alterations
std::string render_table5();  // symbol / mode / voicing correspondence
std::string render_table6();  // complete-scale census by cell count

std::string render_all_tables();

}  // namespace tonality
