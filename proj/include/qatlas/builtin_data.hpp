#pragma once

// JSON documents from data/ compiled into the library, so every consumer can
// run without a data directory. The build embeds the files verbatim.

namespace qatlas::builtin_data {

const char* sp6_level2_json();
const char* sp6_btg_level2_json();
const char* s7_level2_json();
const char* characters_json();
const char* printed_polynomials_json();

}  // namespace qatlas::builtin_data
