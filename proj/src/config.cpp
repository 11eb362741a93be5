// Copyright 2026 The qpercept Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpercept/config.hpp"

#include "qpercept/errors.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qpercept {

std::string_view experiment_kind_name(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::TeacherStudent: return "teacher_student";
    case ExperimentKind::EncodingPca: return "encoding_pca";
    case ExperimentKind::Labelling: return "labelling";
    case ExperimentKind::Normalization: return "normalization";
    }
    return "?";
}

ExperimentOptions ExperimentConfig::experiment_options() const
{
    ExperimentOptions o;
    o.n_seeds = n_seeds;
    o.resolution = resolution;
    o.map_resolution = map_resolution;
    o.lo = lo;
    o.hi = hi;
    o.binary = binary;
    o.threads = threads;
    o.train = train;
    return o;
}

std::string format_double(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line = 0;
};

class Reader {
  public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    [[noreturn]] void fail(const std::string& key, const std::string& what) const
    {
        const auto it = entries_.find(key);
        const std::string where = it == entries_.end() ? "" : "line " + std::to_string(it->second.line) + ": ";
        throw ParseError(where + "key '" + key + "': " + what);
    }

    const std::string* get(const std::string& key)
    {
        used_.insert(key);
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second.value;
    }

    template <typename T>
    void number(const std::string& key, T& out)
    {
        const auto* v = get(key);
        if (!v) {
            return;
        }
        T parsed{};
        const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), parsed);
        if (ec != std::errc{} || ptr != v->data() + v->size()) {
            fail(key, "malformed value '" + *v + "'");
        }
        if constexpr (std::is_floating_point_v<T>) {
            if (!std::isfinite(parsed)) {
                fail(key, "value must be finite");
            }
        }
        out = parsed;
    }

    void boolean(const std::string& key, bool& out)
    {
        const auto* v = get(key);
        if (!v) {
            return;
        }
        if (*v == "true") {
            out = true;
        } else if (*v == "false") {
            out = false;
        } else {
            fail(key, "expected true or false, got '" + *v + "'");
        }
    }

    template <typename T, typename Fn>
    void parsed(const std::string& key, T& out, Fn&& fn)
    {
        const auto* v = get(key);
        if (!v) {
            return;
        }
        try {
            out = fn(*v);
        } catch (const ParseError& e) {
            fail(key, e.what());
        }
    }

    void check_unknown() const
    {
        for (const auto& [key, entry] : entries_) {
            if (!used_.contains(key)) {
                throw ParseError("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
            }
        }
    }

    bool has(const std::string& key) const { return entries_.contains(key); }

  private:
    std::map<std::string, Entry> entries_;
    std::set<std::string> used_;
};

ExperimentKind parse_kind(std::string_view text)
{
    for (auto k : {ExperimentKind::TeacherStudent, ExperimentKind::EncodingPca, ExperimentKind::Labelling,
                   ExperimentKind::Normalization}) {
        if (experiment_kind_name(k) == text) {
            return k;
        }
    }
    throw ParseError("unknown experiment '" + std::string(text) + "'");
}

std::vector<ArchitectureId> parse_students(std::string_view text)
{
    std::vector<ArchitectureId> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) {
            throw ParseError("empty entry in student list");
        }
        out.push_back(ArchitectureId::parse(item));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    if (out.empty()) {
        throw ParseError("student list is empty");
    }
    return out;
}

} // namespace

ExperimentConfig parse_config(std::string_view text)
{
    std::map<std::string, Entry> entries;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": missing key");
        }
        if (value.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": key '" + key + "' has no value");
        }
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }

    Reader r(std::move(entries));
    ExperimentConfig c;
    r.parsed("experiment", c.kind, parse_kind);
    r.parsed("teacher", c.teacher, [](std::string_view v) { return ArchitectureId::parse(v); });
    r.parsed("students", c.students, parse_students);
    r.number("n_seeds", c.n_seeds);
    r.number("resolution", c.resolution);
    r.number("map_resolution", c.map_resolution);
    r.number("lo", c.lo);
    r.number("hi", c.hi);
    r.boolean("binary", c.binary);
    r.number("learning_rate", c.train.learning_rate);
    r.number("epochs", c.train.epochs);
    r.parsed("optimizer", c.train.optimizer, parse_optimizer);
    r.number("seed", c.train.seed);
    r.number("init_scale", c.train.init_scale);
    r.number("threads", c.threads);
    r.number("n_points", c.n_points);
    r.number("radius", c.radius);
    r.number("data_seed", c.data_seed);
    if (const auto* out = r.get("output")) {
        c.output = *out;
    }
    r.check_unknown();

    if (c.kind == ExperimentKind::TeacherStudent) {
        for (const char* key : {"teacher", "students"}) {
            if (!r.has(key)) {
                throw ParseError(std::string("missing required key '") + key + "'");
            }
        }
    }
    auto positive = [&](const char* key, long long v, long long min) {
        if (v < min) {
            r.fail(key, "must be at least " + std::to_string(min));
        }
    };
    positive("n_seeds", c.n_seeds, 1);
    positive("resolution", c.resolution, 2);
    positive("map_resolution", c.map_resolution, 2);
    positive("epochs", c.train.epochs, 1);
    positive("threads", c.threads, 1);
    positive("n_points", c.n_points, 3);
    if (!(c.train.learning_rate > 0)) {
        r.fail("learning_rate", "must be positive");
    }
    if (!(c.train.init_scale >= 0)) {
        r.fail("init_scale", "must be non-negative");
    }
    if (!(c.radius > 0)) {
        r.fail("radius", "must be positive");
    }
    if (!(c.lo <= c.hi)) {
        r.fail("hi", "must not be below lo");
    }
    return c;
}

std::string print_config(const ExperimentConfig& c)
{
    std::ostringstream out;
    out << "experiment = " << experiment_kind_name(c.kind) << "\n";
    out << "teacher = " << c.teacher.name() << "\n";
    if (!c.students.empty()) {
        out << "students = ";
        for (std::size_t i = 0; i < c.students.size(); ++i) {
            out << (i ? ", " : "") << c.students[i].name();
        }
        out << "\n";
    }
    out << "n_seeds = " << c.n_seeds << "\n";
    out << "resolution = " << c.resolution << "\n";
    out << "map_resolution = " << c.map_resolution << "\n";
    out << "lo = " << format_double(c.lo) << "\n";
    out << "hi = " << format_double(c.hi) << "\n";
    out << "binary = " << (c.binary ? "true" : "false") << "\n";
    out << "learning_rate = " << format_double(c.train.learning_rate) << "\n";
    out << "epochs = " << c.train.epochs << "\n";
    out << "optimizer = " << optimizer_name(c.train.optimizer) << "\n";
    out << "seed = " << c.train.seed << "\n";
    out << "init_scale = " << format_double(c.train.init_scale) << "\n";
    out << "threads = " << c.threads << "\n";
    out << "n_points = " << c.n_points << "\n";
    out << "radius = " << format_double(c.radius) << "\n";
    out << "data_seed = " << c.data_seed << "\n";
    out << "output = " << c.output << "\n";
    return out.str();
}

} // namespace qpercept
