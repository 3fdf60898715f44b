#include "crips/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace crips {

const char* const kTraceHeader = "iteration,best_fitness,metric,omega,alpha1,alpha2";
const char* const kEventsHeader = "iteration,best_fitness";

std::string format_double(double value) {
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace {

template <typename Number>
Number parse_full(const std::string& text, const char* what) {
    Number value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto result = std::from_chars(begin, end, value);
    if (text.empty() || result.ec != std::errc() || result.ptr != end) {
        throw ArgumentError(std::string("not a ") + what + ": '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t stop = text.find(separator, start);
        if (stop == std::string::npos) {
            pieces.push_back(text.substr(start));
            return pieces;
        }
        pieces.push_back(text.substr(start, stop - start));
        start = stop + 1;
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

void append_record(std::string& out, const TraceRecord& record) {
    out += std::to_string(record.iteration);
    out += ',';
    out += format_double(record.best_fitness);
    out += ',';
    out += format_double(record.metric);
    out += ',';
    out += format_double(record.omega);
    out += ',';
    out += format_double(record.alpha1);
    out += ',';
    out += format_double(record.alpha2);
    out += '\n';
}

}  // namespace

double parse_double(const std::string& text) {
    return parse_full<double>(text, "number");
}

long parse_long(const std::string& text) {
    return parse_full<long>(text, "whole number");
}

std::uint64_t parse_seed(const std::string& text) {
    return parse_full<std::uint64_t>(text, "seed");
}

std::string render_trace(const RunTrace& trace) {
    std::string out = kTraceHeader;
    out += '\n';
    append_record(out, trace.initial);
    for (const TraceRecord& record : trace.records) {
        append_record(out, record);
    }
    return out;
}

std::string render_events(const RunTrace& trace) {
    std::string out = kEventsHeader;
    out += '\n';
    for (const ImprovementEvent& event : trace.improvement_events) {
        out += std::to_string(event.iteration);
        out += ',';
        out += format_double(event.best_fitness);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading " + path);
    }
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("error while writing " + path);
    }
}

void write_trace(const RunTrace& trace, const std::string& trace_path,
                 const std::string& events_path) {
    write_text_file(trace_path, render_trace(trace));
    write_text_file(events_path, render_events(trace));
}

RunTrace read_trace(const std::string& trace_path, const std::string& events_path,
                    const RunConfig& config) {
    RunTrace trace;
    trace.config = config;
    trace.seed = config.seed;

    std::vector<std::string> lines = split_lines(read_text_file(trace_path));
    if (lines.empty() || lines[0] != kTraceHeader) {
        throw IoError(trace_path + ": unexpected trace header");
    }
    if (lines.size() < 2) {
        throw IoError(trace_path + ": missing the iteration-0 row");
    }
    for (std::size_t i = 1; i < lines.size(); i++) {
        std::vector<std::string> fields = split(lines[i], ',');
        if (fields.size() != 6) {
            throw IoError(trace_path + " row " + std::to_string(i) + ": expected 6 columns");
        }
        TraceRecord record;
        try {
            record.iteration = parse_long(fields[0]);
            record.best_fitness = parse_double(fields[1]);
            record.metric = parse_double(fields[2]);
            record.omega = parse_double(fields[3]);
            record.alpha1 = parse_double(fields[4]);
            record.alpha2 = parse_double(fields[5]);
        } catch (const ArgumentError& error) {
            throw IoError(trace_path + " row " + std::to_string(i) + ": " + error.what());
        }
        if (record.iteration != static_cast<long>(i) - 1) {
            throw IoError(trace_path + ": iterations must run contiguously from 0");
        }
        if (i == 1) {
            trace.initial = record;
        } else {
            trace.records.push_back(record);
        }
    }

    std::vector<std::string> event_lines = split_lines(read_text_file(events_path));
    if (event_lines.empty() || event_lines[0] != kEventsHeader) {
        throw IoError(events_path + ": unexpected events header");
    }
    for (std::size_t i = 1; i < event_lines.size(); i++) {
        std::vector<std::string> fields = split(event_lines[i], ',');
        if (fields.size() != 2) {
            throw IoError(events_path + " row " + std::to_string(i) + ": expected 2 columns");
        }
        ImprovementEvent event;
        try {
            event.iteration = parse_long(fields[0]);
            event.best_fitness = parse_double(fields[1]);
        } catch (const ArgumentError& error) {
            throw IoError(events_path + " row " + std::to_string(i) + ": " + error.what());
        }
        trace.improvement_events.push_back(event);
    }
    return trace;
}

}  // namespace crips
