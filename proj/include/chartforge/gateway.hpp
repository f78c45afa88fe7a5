#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "chartforge/answer.hpp"
#include "chartforge/battery.hpp"
#include "chartforge/chart.hpp"
#include "chartforge/qa.hpp"
#include "chartforge/rng.hpp"

namespace chartforge {

// Zero-shot evaluation prompt sent to remote models (answer-only contract).
inline constexpr const char* kEvalPrompt =
    "You will play as a chart reading expert. You should ONLY give the answer STRING or "
    "NUMBER, without any units. You should Not Give Any Explanation.";

enum class BindingKind { Remote, Oracle, NoisyOracle };

inline std::string to_string(BindingKind k) {
    switch (k) {
    case BindingKind::Remote: return "remote";
    case BindingKind::Oracle: return "oracle";
    case BindingKind::NoisyOracle: return "noisy-oracle";
    }
    return "oracle";
}

inline BindingKind binding_kind_from_string(const std::string& s) {
    if (s == "remote") return BindingKind::Remote;
    if (s == "oracle") return BindingKind::Oracle;
    if (s == "noisy-oracle") return BindingKind::NoisyOracle;
    fail(Errc::config, "unknown evaluator kind: " + s);
}

struct EvaluatorBinding {
    BindingKind kind = BindingKind::Oracle;
    std::string endpoint_url; // remote
    std::string auth_env;     // env var holding the bearer token
    std::string model;        // remote model name
    double error_rate = 0;    // noisy-oracle
    std::uint64_t noise_seed = 0;
    int max_concurrent = 4;
    int retry_budget = 3;
    double backoff_initial_ms = 200;
    double backoff_factor = 2.0;
    double rate_per_sec = 0; // 0 = unlimited
    int timeout_s = 30;
    std::string image_format = "png"; // png | svg
};

inline void to_json(nlohmann::json& j, const EvaluatorBinding& b) {
    j = nlohmann::json{{"kind", to_string(b.kind)},
                       {"endpoint_url", b.endpoint_url},
                       {"auth_env", b.auth_env},
                       {"model", b.model},
                       {"error_rate", b.error_rate},
                       {"noise_seed", b.noise_seed},
                       {"max_concurrent", b.max_concurrent},
                       {"retry_budget", b.retry_budget},
                       {"backoff_initial_ms", b.backoff_initial_ms},
                       {"backoff_factor", b.backoff_factor},
                       {"rate_per_sec", b.rate_per_sec},
                       {"timeout_s", b.timeout_s},
                       {"image_format", b.image_format}};
}

inline void from_json(const nlohmann::json& j, EvaluatorBinding& b) {
    b.kind = binding_kind_from_string(j.at("kind").get<std::string>());
    b.endpoint_url = j.value("endpoint_url", std::string());
    b.auth_env = j.value("auth_env", std::string());
    b.model = j.value("model", std::string());
    b.error_rate = j.value("error_rate", 0.0);
    b.noise_seed = j.value("noise_seed", std::uint64_t{0});
    b.max_concurrent = j.value("max_concurrent", 4);
    b.retry_budget = j.value("retry_budget", 3);
    b.backoff_initial_ms = j.value("backoff_initial_ms", 200.0);
    b.backoff_factor = j.value("backoff_factor", 2.0);
    b.rate_per_sec = j.value("rate_per_sec", 0.0);
    b.timeout_s = j.value("timeout_s", 30);
    b.image_format = j.value("image_format", std::string("png"));
}

inline ValidationReport validate_binding(const EvaluatorBinding& b) {
    ValidationReport r;
    if (b.kind == BindingKind::Remote && b.endpoint_url.empty())
        r.violations.push_back("remote binding requires endpoint_url");
    if (b.kind == BindingKind::NoisyOracle && (b.error_rate < 0 || b.error_rate > 1))
        r.violations.push_back("error_rate outside [0,1]");
    if (b.max_concurrent < 1) r.violations.push_back("max_concurrent < 1");
    if (b.retry_budget < 0) r.violations.push_back("retry_budget < 0");
    if (b.image_format != "png" && b.image_format != "svg")
        r.violations.push_back("image_format must be png or svg");
    return r;
}

// Parses CLI shorthand: "oracle", "noisy:<rate>[:<seed>]",
// "remote:<url>[#<model>]".
inline EvaluatorBinding binding_from_shorthand(const std::string& s) {
    EvaluatorBinding b;
    if (s == "oracle") {
        b.kind = BindingKind::Oracle;
        return b;
    }
    if (s.rfind("noisy:", 0) == 0) {
        b.kind = BindingKind::NoisyOracle;
        auto parts = split(s.substr(6), ':');
        if (parts.empty() || parts[0].empty()) fail(Errc::config, "noisy binding needs a rate");
        b.error_rate = std::strtod(parts[0].c_str(), nullptr);
        if (parts.size() > 1) b.noise_seed = std::strtoull(parts[1].c_str(), nullptr, 10);
        return b;
    }
    if (s.rfind("remote:", 0) == 0) {
        b.kind = BindingKind::Remote;
        std::string rest = s.substr(7);
        auto hash = rest.find('#');
        b.endpoint_url = rest.substr(0, hash);
        if (hash != std::string::npos) b.model = rest.substr(hash + 1);
        return b;
    }
    fail(Errc::config, "unknown evaluator shorthand: " + s);
}

// One item for the gateway: the question text plus enough structure for the
// oracle kinds to derive the answer locally.
struct EvalQuery {
    std::string id;
    std::string question;
    const GroundTruth* gt = nullptr;
    const BatteryItem* battery = nullptr;
    const QAPair* qa = nullptr;
};

struct Transcript {
    std::string id;
    std::string question;
    std::string answer;
    int attempts = 1;
    bool ok = true;
    std::string error;
};

inline void to_json(nlohmann::json& j, const Transcript& t) {
    j = nlohmann::json{{"id", t.id},       {"question", t.question}, {"answer", t.answer},
                       {"attempts", t.attempts}, {"ok", t.ok},       {"error", t.error}};
}

// --- oracle answers ---------------------------------------------------------

// Answers a battery item exactly from ground truth.
inline std::string oracle_answer(const GroundTruth& gt, const BatteryItem& item) {
    try {
        switch (item.form) {
        case BatteryForm::IsChart: {
            auto it = item.bindings.find("chart_type");
            bool match = it == item.bindings.end() || it->second == to_string(gt.chart_type);
            return match ? "yes" : "no";
        }
        case BatteryForm::IsTitleClear:
            return gt.title_clear ? "yes" : "no";
        case BatteryForm::LabelValue: {
            const std::string& label = item.bindings.at("legend_label");
            const std::string& x = item.bindings.at("xlabel");
            return Answer::number(gt.value(label, x), gt.precision).canonical();
        }
        case BatteryForm::ValueLabel: {
            double target = std::strtod(item.bindings.at("value_label").c_str(), nullptr);
            const std::string& x = item.bindings.at("xlabel");
            std::string found;
            for (const auto& label : gt.series_order) {
                double v = gt.is_pie() ? gt.pie_share(label) : gt.value(label, x);
                if (v == target) {
                    if (!found.empty())
                        fail(Errc::oracle, "ambiguous inverse lookup at " + x);
                    found = label;
                }
            }
            if (found.empty()) fail(Errc::oracle, "no series with value at " + x);
            return found;
        }
        case BatteryForm::LabelColor:
            return gt.visual_map.at(item.bindings.at("legend_label")).color_name;
        case BatteryForm::LabelStyle:
            return gt.visual_map.at(item.bindings.at("legend_label")).style_name;
        case BatteryForm::VisualLabel: {
            const std::string& color = item.bindings.at("name_color");
            std::string found;
            for (const auto& [label, vis] : gt.visual_map) {
                if (vis.color_name == color) {
                    if (!found.empty()) fail(Errc::oracle, "ambiguous color " + color);
                    found = label;
                }
            }
            if (found.empty()) fail(Errc::oracle, "no series with color " + color);
            return found;
        }
        }
    } catch (const std::out_of_range&) {
        fail(Errc::oracle, "battery item bindings missing for " + item.item_id);
    }
    fail(Errc::oracle, "unhandled battery form");
}

// Answers a QA pair by re-deriving the gold from ground truth.
inline std::string oracle_answer(const GroundTruth& gt, const QAPair& pair) {
    try {
        return derive_answer(find_template(pair.template_id), pair.bindings, gt).canonical();
    } catch (const Error& e) {
        if (e.code() == Errc::oracle) throw;
        fail(Errc::oracle, std::string("unanswerable item: ") + e.what());
    }
}

inline std::string oracle_answer_query(const EvalQuery& q) {
    if (q.gt == nullptr) fail(Errc::oracle, "oracle query lacks ground truth");
    if (q.battery != nullptr) return oracle_answer(*q.gt, *q.battery);
    if (q.qa != nullptr) return oracle_answer(*q.gt, *q.qa);
    fail(Errc::oracle, "oracle query lacks a structured item");
}

namespace gateway_detail {

inline AnswerKind query_kind(const EvalQuery& q) {
    if (q.battery != nullptr) return q.battery->gold.kind;
    if (q.qa != nullptr) return q.qa->gold.kind;
    return AnswerKind::LabelText;
}

// Produces an answer guaranteed wrong under the item's own grading rule.
inline std::string perturb_answer(const EvalQuery& q, const std::string& gold, Rng& rng) {
    AnswerKind kind = query_kind(q);
    switch (kind) {
    case AnswerKind::YesNo:
        return gold == "yes" ? "no" : "yes";
    case AnswerKind::Number:
    case AnswerKind::Count: {
        double v = std::strtod(gold.c_str(), nullptr);
        double delta = std::max(1.0, 0.11 * std::fabs(v) + 1.0);
        double wrong = v + (rng.bernoulli(0.5) ? delta : -delta);
        if (kind == AnswerKind::Count && wrong < 0) wrong = v + delta;
        return fmt_fixed(wrong, kind == AnswerKind::Count ? 0 : 2);
    }
    case AnswerKind::NumberList:
        return gold + ", 0";
    case AnswerKind::ColorName: {
        const auto& vocab = color_vocabulary();
        for (std::size_t i = 0; i < vocab.size(); ++i) {
            const std::string& c = vocab[rng.below(static_cast<std::uint32_t>(vocab.size()))];
            if (c != gold) return c;
        }
        return "nocolor";
    }
    case AnswerKind::StyleName:
        return gold == "solid" ? "dashed" : "solid";
    default: {
        if (q.gt != nullptr) {
            for (const auto& label : q.gt->series_order)
                if (label != gold) return label;
        }
        return "unknown-" + gold;
    }
    }
}

inline std::string base64_encode(const std::string& bytes) {
    static const char* k = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 2 < bytes.size()) {
        std::uint32_t n = (static_cast<std::uint8_t>(bytes[i]) << 16) |
                          (static_cast<std::uint8_t>(bytes[i + 1]) << 8) |
                          static_cast<std::uint8_t>(bytes[i + 2]);
        out += k[(n >> 18) & 63];
        out += k[(n >> 12) & 63];
        out += k[(n >> 6) & 63];
        out += k[n & 63];
        i += 3;
    }
    if (i + 1 == bytes.size()) {
        std::uint32_t n = static_cast<std::uint8_t>(bytes[i]) << 16;
        out += k[(n >> 18) & 63];
        out += k[(n >> 12) & 63];
        out += "==";
    } else if (i + 2 == bytes.size()) {
        std::uint32_t n = (static_cast<std::uint8_t>(bytes[i]) << 16) |
                          (static_cast<std::uint8_t>(bytes[i + 1]) << 8);
        out += k[(n >> 18) & 63];
        out += k[(n >> 12) & 63];
        out += k[(n >> 6) & 63];
        out += '=';
    }
    return out;
}

struct UrlParts {
    std::string base; // scheme://host[:port]
    std::string path;
};

inline UrlParts split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) fail(Errc::config, "endpoint_url missing scheme: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace gateway_detail

// Uniform evaluator surface over a binding: remote chat-completion endpoint,
// perfect ground-truth oracle, or seeded noisy oracle. Remote requests run
// at temperature 0 with the fixed answer-only prompt.
class Evaluator {
public:
    explicit Evaluator(EvaluatorBinding binding) : binding_(std::move(binding)) {
        ValidationReport report = validate_binding(binding_);
        if (!report.ok()) fail(Errc::config, "invalid binding: " + report.summary());
    }

    const EvaluatorBinding& binding() const { return binding_; }

    // Single round-trip. `image` may be empty for oracle kinds.
    std::string ask(const std::string& image, const EvalQuery& q, Transcript* transcript = nullptr) {
        Transcript local;
        local.id = q.id;
        local.question = q.question;
        std::string answer;
        switch (binding_.kind) {
        case BindingKind::Oracle:
            answer = oracle_answer_query(q);
            break;
        case BindingKind::NoisyOracle: {
            answer = oracle_answer_query(q);
            Rng noise = stream_rng(binding_.noise_seed, "noise", fnv1a64(q.id));
            if (noise.bernoulli(binding_.error_rate))
                answer = gateway_detail::perturb_answer(q, answer, noise);
            break;
        }
        case BindingKind::Remote:
            answer = ask_remote(image, q, local);
            break;
        }
        local.answer = answer;
        if (transcript != nullptr) *transcript = local;
        return answer;
    }

    // Batch with bounded concurrency and stable answer order. The sink (if
    // any) receives one transcript per item in completion order.
    std::vector<std::string> ask_many(const std::string& image,
                                      const std::vector<EvalQuery>& queries,
                                      const std::function<void(const Transcript&)>& sink = {}) {
        std::vector<std::string> answers(queries.size());
        if (binding_.kind != BindingKind::Remote) {
            // Oracle kinds are pure and synchronous.
            for (std::size_t i = 0; i < queries.size(); ++i) {
                Transcript t;
                answers[i] = ask(image, queries[i], &t);
                if (sink) sink(t);
            }
            return answers;
        }

        std::atomic<std::size_t> next{0};
        std::mutex sink_mutex;
        std::vector<std::exception_ptr> errors(queries.size());
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= queries.size()) return;
                Transcript t;
                try {
                    answers[i] = ask(image, queries[i], &t);
                } catch (...) {
                    errors[i] = std::current_exception();
                    t.id = queries[i].id;
                    t.question = queries[i].question;
                    t.ok = false;
                    t.error = "transport failure";
                }
                if (sink) {
                    std::lock_guard<std::mutex> lock(sink_mutex);
                    sink(t);
                }
            }
        };
        std::size_t n_threads =
            std::min<std::size_t>(static_cast<std::size_t>(binding_.max_concurrent),
                                  queries.size());
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return answers;
    }

    // Requests actually sent, including retries (exposed for tests).
    long long requests_sent() const { return requests_sent_.load(); }

private:
    std::string ask_remote(const std::string& image, const EvalQuery& q, Transcript& transcript) {
        if (image.empty()) fail(Errc::config, "remote evaluator requires a rendered image");
        auto parts = gateway_detail::split_url(binding_.endpoint_url);
        httplib::Client client(parts.base);
        client.set_connection_timeout(binding_.timeout_s, 0);
        client.set_read_timeout(binding_.timeout_s, 0);

        httplib::Headers headers;
        if (!binding_.auth_env.empty()) {
            const char* token = std::getenv(binding_.auth_env.c_str());
            if (token != nullptr && token[0] != '\0')
                headers.insert({"Authorization", std::string("Bearer ") + token});
        }

        std::string mime = binding_.image_format == "svg" ? "image/svg+xml" : "image/png";
        nlohmann::json body = {
            {"model", binding_.model},
            {"temperature", 0},
            {"messages",
             {{{"role", "system"}, {"content", kEvalPrompt}},
              {{"role", "user"},
               {"content",
                {{{"type", "image_url"},
                  {"image_url",
                   {{"url", "data:" + mime + ";base64," +
                                gateway_detail::base64_encode(image)}}}},
                 {{"type", "text"}, {"text", q.question}}}}}}}};
        std::string payload = body.dump();

        Rng jitter = stream_rng(fnv1a64(q.id), "backoff");
        std::string last_error;
        for (int attempt = 0; attempt <= binding_.retry_budget; ++attempt) {
            transcript.attempts = attempt + 1;
            if (attempt > 0) {
                double ms = binding_.backoff_initial_ms *
                            std::pow(binding_.backoff_factor, attempt - 1) *
                            (0.9 + 0.2 * jitter.unit());
                std::this_thread::sleep_for(
                    std::chrono::milliseconds(static_cast<long long>(ms)));
            }
            throttle();
            requests_sent_.fetch_add(1);
            httplib::Result res = client.Post(parts.path, headers, payload, "application/json");
            if (!res) {
                last_error = "connection failure";
                continue;
            }
            if (res->status == 429 || res->status >= 500) {
                last_error = "http status " + std::to_string(res->status);
                continue;
            }
            if (res->status != 200)
                fail(Errc::protocol,
                     "evaluator returned status " + std::to_string(res->status));
            try {
                nlohmann::json reply = nlohmann::json::parse(res->body);
                const auto& content = reply.at("choices").at(0).at("message").at("content");
                if (content.is_string()) return content.get<std::string>();
                if (content.is_array()) {
                    std::string text;
                    for (const auto& part : content)
                        if (part.value("type", "") == "text")
                            text += part.value("text", "");
                    return text;
                }
                fail(Errc::protocol, "unexpected content shape in evaluator reply");
            } catch (const nlohmann::json::exception& e) {
                fail(Errc::protocol, std::string("malformed evaluator reply: ") + e.what());
            }
        }
        fail(Errc::transport, "evaluator unreachable after " +
                                  std::to_string(binding_.retry_budget + 1) +
                                  " attempts: " + last_error);
    }

    void throttle() {
        if (binding_.rate_per_sec <= 0) return;
        std::chrono::steady_clock::time_point wake;
        {
            std::lock_guard<std::mutex> lock(bucket_mutex_);
            auto now = std::chrono::steady_clock::now();
            auto interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(1.0 / binding_.rate_per_sec));
            if (next_slot_ < now) next_slot_ = now;
            wake = next_slot_;
            next_slot_ += interval;
        }
        std::this_thread::sleep_until(wake);
    }

    EvaluatorBinding binding_;
    std::atomic<long long> requests_sent_{0};
    std::mutex bucket_mutex_;
    std::chrono::steady_clock::time_point next_slot_{};
};

} // namespace chartforge
