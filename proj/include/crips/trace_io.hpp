#ifndef CRIPS_TRACE_IO_HPP
#define CRIPS_TRACE_IO_HPP

#include <string>

#include "crips/analysis.hpp"
#include "crips/core.hpp"

namespace crips {

// Shortest decimal form that parses back to the identical double, so that
// rendering is deterministic and reading is lossless.
std::string format_double(double value);

// Strict full-string parses; throw ArgumentError on malformed text.
double parse_double(const std::string& text);
long parse_long(const std::string& text);
std::uint64_t parse_seed(const std::string& text);

extern const char* const kTraceHeader;
extern const char* const kEventsHeader;

std::string render_trace(const RunTrace& trace);
std::string render_events(const RunTrace& trace);

// Whole-file helpers; throw IoError when the path cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Writes the trace and its sibling improvement-events file.
void write_trace(const RunTrace& trace, const std::string& trace_path,
                 const std::string& events_path);

// Reads the pair back. The files carry only the numeric rows, so the
// configuration (seed included) is attached from the argument. Throws IoError
// on malformed content.
RunTrace read_trace(const std::string& trace_path, const std::string& events_path,
                    const RunConfig& config);

}  // namespace crips

#endif  // CRIPS_TRACE_IO_HPP
