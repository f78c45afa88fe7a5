#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/chart.hpp"
#include "chartforge/errors.hpp"

namespace chartforge {

struct CorpusPaths {
    std::filesystem::path dir;

    explicit CorpusPaths(const std::string& corpus_dir) : dir(corpus_dir) {}

    std::filesystem::path charts() const { return dir / "charts"; }
    std::filesystem::path specs() const { return dir / "specs.jsonl"; }
    std::filesystem::path qa() const { return dir / "qa.jsonl"; }
    std::filesystem::path eval_log() const { return dir / "eval_log.jsonl"; }
    std::filesystem::path state() const { return dir / "stage_state.json"; }
    std::filesystem::path manifest() const { return dir / "manifest.json"; }
    std::filesystem::path transcripts() const { return dir / "transcripts.jsonl"; }
    std::filesystem::path grades() const { return dir / "grades.jsonl"; }

    std::filesystem::path svg(const std::string& chart_id) const {
        return charts() / (chart_id + ".svg");
    }

    std::filesystem::path png(const std::string& chart_id) const {
        return charts() / (chart_id + ".png");
    }
};

// Append-only JSONL writer that tracks its byte offset; checkpoints record
// offsets so resume can truncate partially written tails.
class JsonlWriter {
public:
    JsonlWriter() = default;

    void open(const std::filesystem::path& path, std::uint64_t truncate_to) {
        path_ = path;
        std::filesystem::create_directories(path.parent_path());
        if (std::filesystem::exists(path)) {
            std::uint64_t size = std::filesystem::file_size(path);
            if (truncate_to > size)
                fail(Errc::integrity, "checkpoint offset beyond file size: " + path.string());
            if (truncate_to < size) std::filesystem::resize_file(path, truncate_to);
        } else if (truncate_to != 0) {
            fail(Errc::integrity, "checkpoint references missing file: " + path.string());
        }
        out_.open(path, std::ios::binary | std::ios::app);
        if (!out_) fail(Errc::io, "cannot open for append: " + path.string());
        offset_ = truncate_to;
    }

    void write(const nlohmann::json& j) { write_line(j.dump()); }

    void write_line(const std::string& line) {
        out_ << line << "\n";
        out_.flush();
        if (!out_) fail(Errc::io, "write failed: " + path_.string());
        offset_ += line.size() + 1;
    }

    std::uint64_t offset() const { return offset_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::uint64_t offset_ = 0;
};

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Errc::io, "cannot write: " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write: " + path.string());
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io, "cannot read: " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

template <typename T>
std::vector<T> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io, "cannot read: " + path.string());
    std::vector<T> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            out.push_back(nlohmann::json::parse(line).get<T>());
        } catch (const nlohmann::json::exception& e) {
            fail(Errc::integrity,
                 path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<nlohmann::json> read_jsonl_raw(const std::filesystem::path& path) {
    return read_jsonl<nlohmann::json>(path);
}

// Per-stage bookkeeping. generated = retained + dropped.
struct StageCounters {
    int generated = 0;
    int retained = 0;
    int dropped = 0;
    int qa_emitted = 0;
    std::map<std::string, int> refined_by_action;
};

inline void to_json(nlohmann::json& j, const StageCounters& c) {
    j = nlohmann::json{{"generated", c.generated},
                       {"retained", c.retained},
                       {"dropped", c.dropped},
                       {"qa_emitted", c.qa_emitted},
                       {"refined_by_action", c.refined_by_action}};
}

inline void from_json(const nlohmann::json& j, StageCounters& c) {
    c.generated = j.at("generated").get<int>();
    c.retained = j.at("retained").get<int>();
    c.dropped = j.at("dropped").get<int>();
    c.qa_emitted = j.at("qa_emitted").get<int>();
    c.refined_by_action = j.at("refined_by_action").get<std::map<std::string, int>>();
}

// Checkpointable pipeline state: which chart of which stage comes next plus
// the jsonl byte offsets that were durable at checkpoint time.
struct StageState {
    int stage_k = 1;
    std::uint64_t master_seed = 0;
    double prior_e0 = 0.5;
    std::string config_hash;
    int next_chart_index = 0;
    bool finished = false;
    std::vector<StageCounters> counters; // index = stage - 1
    std::uint64_t specs_offset = 0;
    std::uint64_t qa_offset = 0;
    std::uint64_t eval_offset = 0;
    std::uint64_t transcripts_offset = 0;

    StageCounters& stage_counters(int stage) {
        while (static_cast<int>(counters.size()) < stage) counters.push_back({});
        return counters[static_cast<std::size_t>(stage - 1)];
    }
};

inline void to_json(nlohmann::json& j, const StageState& s) {
    j = nlohmann::json{{"stage_k", s.stage_k},
                       {"master_seed", s.master_seed},
                       {"prior_e0", s.prior_e0},
                       {"config_hash", s.config_hash},
                       {"next_chart_index", s.next_chart_index},
                       {"finished", s.finished},
                       {"counters", s.counters},
                       {"specs_offset", s.specs_offset},
                       {"qa_offset", s.qa_offset},
                       {"eval_offset", s.eval_offset},
                       {"transcripts_offset", s.transcripts_offset}};
}

inline void from_json(const nlohmann::json& j, StageState& s) {
    s.stage_k = j.at("stage_k").get<int>();
    s.master_seed = j.at("master_seed").get<std::uint64_t>();
    s.prior_e0 = j.at("prior_e0").get<double>();
    s.config_hash = j.at("config_hash").get<std::string>();
    s.next_chart_index = j.at("next_chart_index").get<int>();
    s.finished = j.at("finished").get<bool>();
    s.counters = j.at("counters").get<std::vector<StageCounters>>();
    s.specs_offset = j.at("specs_offset").get<std::uint64_t>();
    s.qa_offset = j.at("qa_offset").get<std::uint64_t>();
    s.eval_offset = j.at("eval_offset").get<std::uint64_t>();
    s.transcripts_offset = j.value("transcripts_offset", std::uint64_t{0});
}

inline void save_state(const CorpusPaths& paths, const StageState& state) {
    nlohmann::json j = state;
    atomic_write(paths.state(), j.dump(2) + "\n");
}

inline StageState load_state(const CorpusPaths& paths) {
    if (!std::filesystem::exists(paths.state()))
        fail(Errc::integrity, "no checkpoint in " + paths.dir.string());
    try {
        return nlohmann::json::parse(read_file(paths.state())).get<StageState>();
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::integrity, std::string("corrupt checkpoint: ") + e.what());
    }
}

} // namespace chartforge
