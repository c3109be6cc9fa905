#pragma once

#include "lumispec/error.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <fmt/format.h>

namespace lumispec {

using TraceValue = std::variant<std::vector<double>, std::string>;

struct TraceStep {
    int index = 0;
    std::string name;
    std::vector<std::pair<std::string, TraceValue>> entries;

    void put(std::string key, double value);
    void put(std::string key, std::span<const double> values);
    void put(std::string key, std::string text);

    const TraceValue* find(std::string_view key) const;
    // Throws if `key` is missing or holds text.
    double number(std::string_view key) const;
    std::span<const double> numbers(std::string_view key) const;

    bool operator==(const TraceStep&) const = default;
};

/// Ordered record of the analysis steps 1..10 and their intermediates.
class PipelineTrace {
public:
    // Steps must be opened in strictly increasing index order.
    TraceStep& begin_step(int index, std::string name);

    const std::vector<TraceStep>& steps() const noexcept { return steps_; }
    const TraceStep* step(int index) const;

    bool operator==(const PipelineTrace&) const = default;

private:
    std::vector<TraceStep> steps_;
};

// Text form: a `lumispec-trace v1` header, then per step a `step <n> <name>`
// line, `key = v1 v2 ...` (17 significant digits) or `key : text` lines, and
// `end`. Reading back yields an identical trace.
void write_trace(std::ostream& out, const PipelineTrace& trace);
PipelineTrace read_trace(std::istream& in);

// Runs `f`, prefixing any Error message with the step that raised it.
template <class F>
auto at_step(int index, std::string_view name, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), fmt::format("step {} ({}): {}", index, name, e.what()));
    }
}

} // namespace lumispec
