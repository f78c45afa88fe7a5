#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/battery.hpp"
#include "chartforge/compose.hpp"
#include "chartforge/corpus.hpp"
#include "chartforge/gateway.hpp"
#include "chartforge/qa.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/refine.hpp"
#include "chartforge/seed_synth.hpp"
#include "chartforge/svg.hpp"

namespace chartforge {

struct PipelineConfig {
    std::uint64_t master_seed = 1;
    int stages = 3;
    int charts_per_stage = 500;
    // 10 QA per chart so the default vCoT round (10 * 0.2 = 2) hits the
    // 20% target exactly.
    int qa_per_chart = 10;
    double vcot_ratio = 0.2;
    Thresholds thresholds;
    double prior_e0 = 0.5;
    std::string corpus_dir = "corpus";
    std::string seeds_path;   // empty -> synthesize
    int synth_seed_count = 200;
    EvaluatorBinding evaluator; // current-stage evaluator
    bool has_previous = false;
    EvaluatorBinding previous_evaluator;          // e_{k-1} source when dual scoring
    std::vector<EvaluatorBinding> stage_evaluators; // optional per-stage override
    bool dual_score = true;
    bool emit_png = false;
    int checkpoint_every = 25;

    // Test hook: abort (as if crashed) after this many charts total.
    // Not serialized, so it never affects the manifest hash.
    int debug_stop_after = 0;
};

// corpus_dir is a location, not semantics: it stays out of the serialized
// form so runs of one config into different directories share a manifest.
inline void to_json(nlohmann::json& j, const PipelineConfig& c) {
    j = nlohmann::json{{"master_seed", c.master_seed},
                       {"stages", c.stages},
                       {"charts_per_stage", c.charts_per_stage},
                       {"qa_per_chart", c.qa_per_chart},
                       {"vcot_ratio", c.vcot_ratio},
                       {"tau_up", c.thresholds.up},
                       {"tau_down", c.thresholds.down},
                       {"prior_e0", c.prior_e0},
                       {"seeds_path", c.seeds_path},
                       {"synth_seed_count", c.synth_seed_count},
                       {"evaluator", c.evaluator},
                       {"dual_score", c.dual_score},
                       {"emit_png", c.emit_png},
                       {"checkpoint_every", c.checkpoint_every},
                       {"stage_evaluators", c.stage_evaluators}};
    if (c.has_previous) j["previous_evaluator"] = c.previous_evaluator;
}

inline void from_json(const nlohmann::json& j, PipelineConfig& c) {
    c.master_seed = j.value("master_seed", std::uint64_t{1});
    c.stages = j.value("stages", 3);
    c.charts_per_stage = j.value("charts_per_stage", 500);
    c.qa_per_chart = j.value("qa_per_chart", 10);
    c.vcot_ratio = j.value("vcot_ratio", 0.2);
    c.thresholds.up = j.value("tau_up", 0.2);
    c.thresholds.down = j.value("tau_down", 0.2);
    c.prior_e0 = j.value("prior_e0", 0.5);
    c.seeds_path = j.value("seeds_path", std::string());
    c.synth_seed_count = j.value("synth_seed_count", 200);
    if (j.contains("evaluator")) c.evaluator = j.at("evaluator").get<EvaluatorBinding>();
    c.has_previous = j.contains("previous_evaluator");
    if (c.has_previous)
        c.previous_evaluator = j.at("previous_evaluator").get<EvaluatorBinding>();
    c.stage_evaluators =
        j.value("stage_evaluators", std::vector<EvaluatorBinding>{});
    c.dual_score = j.value("dual_score", true);
    c.emit_png = j.value("emit_png", false);
    c.checkpoint_every = j.value("checkpoint_every", 25);
}

inline std::string config_hash(const PipelineConfig& config) {
    nlohmann::json j = config;
    return to_hex(fnv1a64(j.dump()));
}

// Thrown by the debug_stop_after hook to simulate an abrupt interruption.
struct StopRequested {};

namespace pipeline_detail {

inline const EvaluatorBinding& current_binding(const PipelineConfig& config, int stage) {
    if (!config.stage_evaluators.empty()) {
        std::size_t idx = static_cast<std::size_t>(stage - 1);
        if (idx < config.stage_evaluators.size()) return config.stage_evaluators[idx];
    }
    return config.evaluator;
}

// The previous-stage evaluator for stage k, if dual scoring is on: the
// explicit previous binding for stage 1, otherwise stage k-1's binding.
inline const EvaluatorBinding* previous_binding(const PipelineConfig& config, int stage) {
    if (!config.dual_score) return nullptr;
    if (stage == 1)
        return config.has_previous ? &config.previous_evaluator : nullptr;
    if (!config.stage_evaluators.empty()) {
        std::size_t idx = static_cast<std::size_t>(stage - 2);
        if (idx < config.stage_evaluators.size()) return &config.stage_evaluators[idx];
    }
    return &config.evaluator;
}

inline std::vector<EvalQuery> battery_queries(const EvalBattery& battery, const GroundTruth& gt) {
    std::vector<EvalQuery> queries;
    for (const auto& item : battery.items) {
        EvalQuery q;
        q.id = item.item_id;
        q.question = item.question;
        q.gt = &gt;
        q.battery = &item;
        queries.push_back(q);
    }
    return queries;
}

} // namespace pipeline_detail

// Loads the configured seed catalog (file or built-in synthesizer).
inline SeedCatalog load_catalog(const PipelineConfig& config, const PaletteTable& palettes) {
    if (!config.seeds_path.empty()) return load_seeds(config.seeds_path, palettes).catalog;
    return synthesize_catalog(config.master_seed, config.synth_seed_count);
}

struct StageRunner {
    PipelineConfig config;
    CorpusPaths paths;
    PaletteTable palettes;
    SeedCatalog catalog;
    JsonlWriter specs_out, qa_out, eval_out, transcripts_out;
    int charts_done_total = 0;

    explicit StageRunner(PipelineConfig cfg)
        : config(std::move(cfg)), paths(config.corpus_dir), palettes(),
          catalog(load_catalog(config, palettes)) {}

    void open_outputs(const StageState& state) {
        specs_out.open(paths.specs(), state.specs_offset);
        qa_out.open(paths.qa(), state.qa_offset);
        eval_out.open(paths.eval_log(), state.eval_offset);
        transcripts_out.open(paths.transcripts(), state.transcripts_offset);
    }

    void checkpoint(StageState& state) {
        state.specs_offset = specs_out.offset();
        state.qa_offset = qa_out.offset();
        state.eval_offset = eval_out.offset();
        state.transcripts_offset = transcripts_out.offset();
        save_state(paths, state);
    }

    void transcript_sink(const Transcript& t) {
        nlohmann::json j = t;
        transcripts_out.write(j);
    }

    // Runs charts [state.next_chart_index, charts_per_stage) of the current
    // stage, then advances the state to the next stage.
    void run_stage(StageState& state) {
        const int stage = state.stage_k;
        Evaluator current(pipeline_detail::current_binding(config, stage));
        const EvaluatorBinding* prev_binding = pipeline_detail::previous_binding(config, stage);
        std::unique_ptr<Evaluator> previous;
        if (prev_binding != nullptr) previous = std::make_unique<Evaluator>(*prev_binding);

        bool remote_involved = current.binding().kind == BindingKind::Remote ||
                               (previous && previous->binding().kind == BindingKind::Remote);

        for (int i = state.next_chart_index; i < config.charts_per_stage; ++i) {
            const ChartSeed& seed = pick_seed(stage, i);
            std::uint64_t chart_stream = StreamPath(config.master_seed)
                                             .tag("chart")
                                             .tag(static_cast<std::uint64_t>(stage))
                                             .tag(static_cast<std::uint64_t>(i))
                                             .seed();
            ChartPair pair = compose_chart(seed, palettes, chart_stream);

            Rng battery_rng = stream_rng(config.master_seed, "battery",
                                         static_cast<std::uint64_t>(stage),
                                         static_cast<std::uint64_t>(i));
            EvalBattery battery = build_battery(pair.gt, pair.spec, battery_rng);

            std::string image;
            if (remote_involved)
                image = current.binding().image_format == "svg" ? render_svg(pair.spec)
                                                                : render_png(pair.spec);

            auto sink = [this](const Transcript& t) { transcript_sink(t); };
            auto queries = pipeline_detail::battery_queries(battery, pair.gt);
            std::vector<std::string> answers = current.ask_many(image, queries, sink);
            EvalScore score = score_chart(battery, answers, stage);

            double prev_e_value = config.prior_e0, prev_e_visual = config.prior_e0;
            std::optional<std::vector<std::string>> prev_answers;
            std::string prev_source = "prior";
            if (previous) {
                prev_answers = previous->ask_many(image, queries, sink);
                EvalScore prev_score = score_chart(battery, *prev_answers, stage - 1);
                prev_e_value = prev_score.e_value;
                prev_e_visual = prev_score.e_visual;
                prev_source = "binding";
            }

            Rng action_rng = stream_rng(config.master_seed, "action",
                                        static_cast<std::uint64_t>(stage),
                                        static_cast<std::uint64_t>(i));
            auto vaem = applicable_vaem(pair.spec, seed, palettes);
            auto viem = applicable_viem(pair.spec, palettes);
            ActionKind action = select_action(score, prev_e_value, prev_e_visual,
                                              config.thresholds, vaem, viem, action_rng);

            nlohmann::json log = {{"chart_id", pair.spec.chart_id},
                                  {"stage_k", stage},
                                  {"battery", battery},
                                  {"answers_current", answers},
                                  {"score", score},
                                  {"prev_e_value", prev_e_value},
                                  {"prev_e_visual", prev_e_visual},
                                  {"prev_source", prev_source},
                                  {"delta_value", score.e_value - prev_e_value},
                                  {"delta_visual", score.e_visual - prev_e_visual},
                                  {"action", to_string(action)}};
            if (prev_answers) log["answers_previous"] = *prev_answers;
            eval_out.write(log);

            StageCounters& counters = state.stage_counters(stage);
            counters.generated++;

            if (action == ActionKind::Drop) {
                counters.dropped++;
            } else {
                if (action != ActionKind::None) {
                    Rng refine_rng = stream_rng(config.master_seed, "refine",
                                                static_cast<std::uint64_t>(stage),
                                                static_cast<std::uint64_t>(i));
                    auto refined =
                        apply_action(pair.spec, pair.gt, action, seed, palettes, refine_rng);
                    if (refined) {
                        pair = std::move(*refined);
                        counters.refined_by_action[to_string(action)]++;
                    }
                }
                counters.retained++;

                std::string svg = render_svg(pair.spec);
                write_file(paths.svg(pair.spec.chart_id), svg);
                if (config.emit_png) write_file(paths.png(pair.spec.chart_id), render_png(pair.spec));

                Rng qa_rng = stream_rng(config.master_seed, "qa",
                                        static_cast<std::uint64_t>(stage),
                                        static_cast<std::uint64_t>(i));
                QABatch batch = generate_qa_batch(pair.gt, pair.spec, config.qa_per_chart,
                                                  config.vcot_ratio, qa_rng);
                std::vector<std::string> qa_ids;
                for (const auto& qa_pair : batch.pairs) {
                    nlohmann::json qj = qa_pair;
                    qa_out.write(qj);
                    qa_ids.push_back(qa_pair.qa_id);
                }
                counters.qa_emitted += static_cast<int>(batch.pairs.size());

                nlohmann::json record = {
                    {"spec", pair.spec},
                    {"ground_truth", pair.gt},
                    {"provenance",
                     {{"stage_k", stage},
                      {"seed_id", seed.seed_id},
                      {"chart_stream", to_hex(chart_stream)},
                      {"chart_index", i},
                      {"action", to_string(action)},
                      {"tick_branch", pair.spec.tick_branch},
                      {"x_kind", to_string(pair.spec.x_kind)},
                      {"svg_path", "charts/" + pair.spec.chart_id + ".svg"},
                      {"qa_ids", qa_ids},
                      {"qa_shortfall", batch.shortfall}}}};
                specs_out.write(record);
            }

            state.next_chart_index = i + 1;
            ++charts_done_total;
            if (config.debug_stop_after > 0 && charts_done_total >= config.debug_stop_after)
                throw StopRequested{};
            if ((i + 1) % config.checkpoint_every == 0) checkpoint(state);
        }

        state.stage_k = stage + 1;
        state.next_chart_index = 0;
        checkpoint(state);
    }

    const ChartSeed& pick_seed(int stage, int index) {
        Rng rng = stream_rng(config.master_seed, "seed-pick", static_cast<std::uint64_t>(stage),
                             static_cast<std::uint64_t>(index));
        return catalog.seeds[rng.below(static_cast<std::uint32_t>(catalog.seeds.size()))];
    }
};

// Fresh run: writes the manifest, runs all stages, leaves a finished state.
inline StageState run_pipeline(const PipelineConfig& config) {
    CorpusPaths paths(config.corpus_dir);
    if (std::filesystem::exists(paths.state())) {
        StageState existing = load_state(paths);
        if (!existing.finished)
            fail(Errc::config, "corpus has an unfinished run; use resume: " +
                                   paths.dir.string());
    }
    std::filesystem::create_directories(paths.charts());

    nlohmann::json cj = config;
    nlohmann::json manifest = {{"config", cj}, {"config_hash", config_hash(config)},
                               {"format_version", 1}};
    atomic_write(paths.manifest(), manifest.dump(2) + "\n");

    StageState state;
    state.master_seed = config.master_seed;
    state.prior_e0 = config.prior_e0;
    state.config_hash = config_hash(config);

    StageRunner runner(config);
    runner.open_outputs(state);
    runner.checkpoint(state);
    while (state.stage_k <= config.stages) runner.run_stage(state);
    state.finished = true;
    runner.checkpoint(state);
    return state;
}

// Resume from the last checkpoint. The regenerated corpus is byte-identical
// to an uninterrupted run because every chart derives its streams from
// (master seed, stage, index) alone and partial tails are truncated.
inline StageState resume_pipeline(const std::string& corpus_dir,
                                  const std::optional<PipelineConfig>& override_config =
                                      std::nullopt,
                                  int debug_stop_after = 0) {
    CorpusPaths paths(corpus_dir);
    if (!std::filesystem::exists(paths.manifest()))
        fail(Errc::integrity, "no manifest in " + corpus_dir);
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(paths.manifest()));
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::integrity, std::string("corrupt manifest: ") + e.what());
    }
    PipelineConfig config = manifest.at("config").get<PipelineConfig>();
    config.corpus_dir = corpus_dir;
    config.debug_stop_after = debug_stop_after;

    if (override_config) {
        if (config_hash(*override_config) != config_hash(config))
            fail(Errc::integrity,
                 "manifest mismatch: supplied config differs from the recorded one");
    }

    StageState state = load_state(paths);
    if (state.config_hash != config_hash(config))
        fail(Errc::integrity, "manifest mismatch: checkpoint was written by another config");
    if (state.finished) return state;

    StageRunner runner(config);
    runner.open_outputs(state); // truncates tails past the checkpoint
    while (state.stage_k <= config.stages) runner.run_stage(state);
    state.finished = true;
    runner.checkpoint(state);
    return state;
}

// --- run report --------------------------------------------------------------

struct RunReport {
    nlohmann::json json;
    std::string text;
};

inline RunReport corpus_report(const std::string& corpus_dir) {
    CorpusPaths paths(corpus_dir);
    if (!std::filesystem::exists(paths.specs()))
        fail(Errc::integrity, "no corpus at " + corpus_dir);

    auto records = read_jsonl_raw(paths.specs());
    auto eval_rows = read_jsonl_raw(paths.eval_log());
    std::vector<QAPair> qa_pairs;
    if (std::filesystem::exists(paths.qa())) qa_pairs = read_jsonl<QAPair>(paths.qa());

    std::map<int, int> retained_per_stage;
    std::map<int, int> tick_branches;
    int continuous_axis_charts = 0;
    for (const auto& r : records) {
        int stage = r.at("provenance").at("stage_k").get<int>();
        retained_per_stage[stage]++;
        std::string x_kind = r.at("provenance").at("x_kind").get<std::string>();
        if (x_kind != "categorical") {
            ++continuous_axis_charts;
            tick_branches[r.at("provenance").at("tick_branch").get<int>()]++;
        }
    }

    std::map<std::string, int> action_histogram;
    std::map<int, int> generated_per_stage, dropped_per_stage;
    for (const auto& row : eval_rows) {
        action_histogram[row.at("action").get<std::string>()]++;
        int stage = row.at("stage_k").get<int>();
        generated_per_stage[stage]++;
        if (row.at("action").get<std::string>() == "drop") dropped_per_stage[stage]++;
    }

    std::map<std::string, int> family_coverage;
    int vcot = 0;
    std::map<std::string, int> retrieval_counts;
    for (const auto& qa : qa_pairs) {
        family_coverage[qa.template_id]++;
        if (qa.form == QAForm::VCot) ++vcot;
        retrieval_counts[to_string(qa.retrieval_class)]++;
    }

    nlohmann::json j;
    j["stages"] = nlohmann::json::object();
    for (const auto& [stage, generated] : generated_per_stage) {
        j["stages"][std::to_string(stage)] = {
            {"generated", generated},
            {"dropped", dropped_per_stage[stage]},
            {"retained", retained_per_stage[stage]}};
    }
    j["action_histogram"] = action_histogram;
    j["qa_total"] = qa_pairs.size();
    j["qa_vcot_fraction"] =
        qa_pairs.empty() ? 0.0 : static_cast<double>(vcot) / static_cast<double>(qa_pairs.size());
    j["qa_family_coverage"] = family_coverage;
    j["qa_retrieval_counts"] = retrieval_counts;
    nlohmann::json ticks = nlohmann::json::object();
    for (const auto& [branch, count] : tick_branches) {
        double frac = continuous_axis_charts == 0
                          ? 0.0
                          : static_cast<double>(count) / continuous_axis_charts;
        ticks[std::to_string(branch)] = {{"count", count}, {"fraction", frac}};
    }
    j["tick_omission"] = {{"continuous_axis_charts", continuous_axis_charts},
                          {"branches", ticks}};

    if (std::filesystem::exists(paths.grades())) {
        auto grade_records = read_jsonl<GradeRecord>(paths.grades());
        Report rep = aggregate(grade_records);
        nlohmann::json gj = rep;
        j["grading"] = gj;
    }

    std::string text;
    text += "corpus: " + corpus_dir + "\n";
    for (const auto& [stage, generated] : generated_per_stage)
        text += "stage " + std::to_string(stage) + ": generated " + std::to_string(generated) +
                ", dropped " + std::to_string(dropped_per_stage[stage]) + ", retained " +
                std::to_string(retained_per_stage[stage]) + "\n";
    text += "actions:\n";
    for (const auto& [action, count] : action_histogram)
        text += "  " + action + ": " + std::to_string(count) + "\n";
    text += "qa pairs: " + std::to_string(qa_pairs.size()) +
            " (vcot fraction " + fmt_fixed(j["qa_vcot_fraction"].get<double>(), 3) + ")\n";
    text += "template coverage: " + std::to_string(family_coverage.size()) + " of " +
            std::to_string(builtin_templates().size()) + " families\n";
    if (continuous_axis_charts > 0) {
        text += "tick omission over " + std::to_string(continuous_axis_charts) +
                " continuous-axis charts:";
        for (int b : {0, 1, 2}) {
            auto it = tick_branches.find(b);
            double frac = it == tick_branches.end()
                              ? 0.0
                              : static_cast<double>(it->second) / continuous_axis_charts;
            text += " branch" + std::to_string(b) + "=" + fmt_fixed(frac, 3);
        }
        text += "\n";
    }
    return {j, text};
}

} // namespace chartforge
