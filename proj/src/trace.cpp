#include "lumispec/trace.hpp"

#include "csv.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace lumispec {

void TraceStep::put(std::string key, double value)
{
    entries.emplace_back(std::move(key), std::vector<double>{value});
}

void TraceStep::put(std::string key, std::span<const double> values)
{
    entries.emplace_back(std::move(key), std::vector<double>(values.begin(), values.end()));
}

void TraceStep::put(std::string key, std::string text)
{
    entries.emplace_back(std::move(key), std::move(text));
}

const TraceValue* TraceStep::find(std::string_view key) const
{
    for (const auto& [k, v] : entries)
        if (k == key)
            return &v;
    return nullptr;
}

std::span<const double> TraceStep::numbers(std::string_view key) const
{
    const auto* v = find(key);
    const auto* nums = v ? std::get_if<std::vector<double>>(v) : nullptr;
    if (!nums)
        throw Error(ErrorKind::domain,
                    fmt::format("trace step {} has no numeric entry '{}'", index, key));
    return *nums;
}

double TraceStep::number(std::string_view key) const
{
    const auto nums = numbers(key);
    if (nums.size() != 1)
        throw Error(ErrorKind::domain, fmt::format("trace entry '{}' is not a scalar", key));
    return nums.front();
}

TraceStep& PipelineTrace::begin_step(int index, std::string name)
{
    if (index < 1 || index > 10 || (!steps_.empty() && index <= steps_.back().index))
        throw Error(ErrorKind::domain, fmt::format("trace step {} out of order", index));
    steps_.push_back(TraceStep{index, std::move(name), {}});
    return steps_.back();
}

const TraceStep* PipelineTrace::step(int index) const
{
    for (const auto& s : steps_)
        if (s.index == index)
            return &s;
    return nullptr;
}

void write_trace(std::ostream& out, const PipelineTrace& trace)
{
    out << "lumispec-trace v1\n";
    for (const auto& step : trace.steps()) {
        out << "step " << step.index << ' ' << step.name << '\n';
        for (const auto& [key, value] : step.entries) {
            if (const auto* text = std::get_if<std::string>(&value)) {
                out << key << " : " << *text << '\n';
                continue;
            }
            out << key << " =";
            for (double v : std::get<std::vector<double>>(value))
                out << ' ' << fmt::format("{:.17g}", v);
            out << '\n';
        }
        out << "end\n";
    }
}

namespace {

[[noreturn]] void bad_trace(std::size_t line_no, std::string_view msg)
{
    throw Error(ErrorKind::parse, fmt::format("trace: line {}: {}", line_no, msg));
}

} // namespace

PipelineTrace read_trace(std::istream& in)
{
    PipelineTrace trace;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line) || detail::trim(line) != "lumispec-trace v1")
        bad_trace(1, "missing 'lumispec-trace v1' header");
    ++line_no;
    TraceStep* current = nullptr;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!current) {
            std::istringstream ss(line);
            std::string word, name;
            int index = 0;
            if (!(ss >> word >> index >> name) || word != "step")
                bad_trace(line_no, "expected 'step <n> <name>'");
            try {
                current = &trace.begin_step(index, name);
            } catch (const Error& e) {
                bad_trace(line_no, e.what());
            }
            continue;
        }
        if (line == "end") {
            current = nullptr;
            continue;
        }
        const auto eq = line.find(" =");
        const auto colon = line.find(" : ");
        if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
            current->put(line.substr(0, colon), line.substr(colon + 3));
            continue;
        }
        if (eq == std::string::npos)
            bad_trace(line_no, "expected 'key = numbers' or 'key : text'");
        std::vector<double> values;
        std::istringstream ss(line.substr(eq + 2));
        std::string token;
        while (ss >> token) {
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size())
                bad_trace(line_no, fmt::format("bad number '{}'", token));
            values.push_back(v);
        }
        current->put(line.substr(0, eq), std::span<const double>(values));
    }
    if (current)
        bad_trace(line_no, "unterminated step");
    return trace;
}

} // namespace lumispec
