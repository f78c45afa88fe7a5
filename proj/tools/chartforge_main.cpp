#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chartforge/corpus.hpp"
#include "chartforge/gateway.hpp"
#include "chartforge/grade.hpp"
#include "chartforge/pipeline.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/seed_synth.hpp"
#include "chartforge/svg.hpp"

namespace cf = chartforge;

namespace {

std::vector<cf::ChartPair> load_pairs(const std::string& path) {
    std::vector<cf::ChartPair> pairs;
    for (const auto& row : cf::read_jsonl_raw(path)) {
        cf::ChartPair pair;
        pair.spec = row.at("spec").get<cf::ChartSpec>();
        pair.gt = row.at("ground_truth").get<cf::GroundTruth>();
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

int cmd_seed_synth(int count, std::uint64_t master_seed, const std::string& out,
                   const std::string& domains_csv) {
    std::vector<std::string> domains;
    if (!domains_csv.empty())
        for (auto& d : cf::split(domains_csv, ',')) domains.push_back(cf::trim(d));
    cf::SeedCatalog catalog = cf::synthesize_catalog(master_seed, count, domains);
    cf::save_seeds(catalog, out);
    std::cout << "wrote " << catalog.seeds.size() << " seeds to " << out << "\n";
    return 0;
}

int cmd_seed_validate(const std::string& in) {
    cf::PaletteTable palettes;
    cf::SeedLoadResult result = cf::load_seeds(in, palettes);
    std::cout << "valid seeds: " << result.catalog.seeds.size() << ", rejected: "
              << result.rejected << "\n";
    for (const auto& line : result.rejection_log) std::cout << "  " << line << "\n";
    return 0;
}

int cmd_compose(const std::string& seeds_path, int count, std::uint64_t master_seed,
                const std::string& out) {
    cf::PaletteTable palettes;
    cf::SeedCatalog catalog = seeds_path.empty()
                                  ? cf::synthesize_catalog(master_seed, 100)
                                  : cf::load_seeds(seeds_path, palettes).catalog;
    std::filesystem::create_directories(std::filesystem::path(out).parent_path().empty()
                                            ? "."
                                            : std::filesystem::path(out).parent_path());
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) cf::fail(cf::Errc::io, "cannot write " + out);
    for (int i = 0; i < count; ++i) {
        cf::Rng pick = cf::stream_rng(master_seed, "seed-pick", 1, static_cast<std::uint64_t>(i));
        const cf::ChartSeed& seed =
            catalog.seeds[pick.below(static_cast<std::uint32_t>(catalog.seeds.size()))];
        std::uint64_t stream = cf::StreamPath(master_seed)
                                   .tag("chart")
                                   .tag(std::uint64_t{1})
                                   .tag(static_cast<std::uint64_t>(i))
                                   .seed();
        cf::ChartPair pair = cf::compose_chart(seed, palettes, stream);
        nlohmann::json record = {{"spec", pair.spec}, {"ground_truth", pair.gt}};
        file << record.dump() << "\n";
    }
    std::cout << "composed " << count << " charts into " << out << "\n";
    return 0;
}

int cmd_render(const std::string& specs_path, const std::string& out_dir, bool png) {
    auto pairs = load_pairs(specs_path);
    std::filesystem::create_directories(out_dir);
    for (const auto& pair : pairs) {
        cf::write_file(std::filesystem::path(out_dir) / (pair.spec.chart_id + ".svg"),
                       cf::render_svg(pair.spec));
        if (png)
            cf::write_file(std::filesystem::path(out_dir) / (pair.spec.chart_id + ".png"),
                           cf::render_png(pair.spec));
    }
    std::cout << "rendered " << pairs.size() << " charts into " << out_dir << "\n";
    return 0;
}

int cmd_qa(const std::string& specs_path, const std::string& out, int per_chart,
           double vcot_ratio, std::uint64_t master_seed) {
    auto pairs = load_pairs(specs_path);
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) cf::fail(cf::Errc::io, "cannot write " + out);
    int total = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        cf::Rng rng = cf::stream_rng(master_seed, "qa-cli", static_cast<std::uint64_t>(i),
                                     cf::fnv1a64(pairs[i].spec.chart_id));
        cf::QABatch batch =
            cf::generate_qa_batch(pairs[i].gt, pairs[i].spec, per_chart, vcot_ratio, rng);
        for (const auto& pair : batch.pairs) {
            nlohmann::json j = pair;
            file << j.dump() << "\n";
            ++total;
        }
    }
    std::cout << "generated " << total << " qa pairs into " << out << "\n";
    return 0;
}

int cmd_evaluate(const std::string& specs_path, const std::string& qa_path,
                 const std::string& evaluator_sh, const std::string& out,
                 const std::string& transcripts_path) {
    auto pairs = load_pairs(specs_path);
    std::map<std::string, const cf::ChartPair*> by_id;
    for (const auto& pair : pairs) by_id[pair.spec.chart_id] = &pair;

    auto qa_pairs = cf::read_jsonl<cf::QAPair>(qa_path);
    std::map<std::string, std::vector<const cf::QAPair*>> by_chart;
    for (const auto& qa : qa_pairs) by_chart[qa.chart_id].push_back(&qa);

    cf::Evaluator evaluator(cf::binding_from_shorthand(evaluator_sh));
    bool remote = evaluator.binding().kind == cf::BindingKind::Remote;

    std::ofstream answers(out, std::ios::binary | std::ios::trunc);
    if (!answers) cf::fail(cf::Errc::io, "cannot write " + out);
    std::ofstream transcripts;
    if (!transcripts_path.empty()) transcripts.open(transcripts_path, std::ios::trunc);
    auto sink = [&](const cf::Transcript& t) {
        if (transcripts.is_open()) {
            nlohmann::json j = t;
            transcripts << j.dump() << "\n";
        }
    };

    int answered = 0;
    for (const auto& [chart_id, list] : by_chart) {
        auto it = by_id.find(chart_id);
        if (it == by_id.end())
            cf::fail(cf::Errc::integrity, "qa references unknown chart: " + chart_id);
        const cf::ChartPair& pair = *it->second;
        std::string image;
        if (remote)
            image = evaluator.binding().image_format == "svg" ? cf::render_svg(pair.spec)
                                                              : cf::render_png(pair.spec);
        std::vector<cf::EvalQuery> queries;
        for (const cf::QAPair* qa : list) {
            cf::EvalQuery q;
            q.id = qa->qa_id;
            q.question = qa->question;
            q.gt = &pair.gt;
            q.qa = qa;
            queries.push_back(q);
        }
        std::vector<std::string> raw = evaluator.ask_many(image, queries, sink);
        for (std::size_t i = 0; i < queries.size(); ++i) {
            nlohmann::json j = {{"qa_id", queries[i].id}, {"raw", raw[i]}};
            answers << j.dump() << "\n";
            ++answered;
        }
    }
    std::cout << "answered " << answered << " items into " << out << "\n";
    return 0;
}

int cmd_grade(const std::string& qa_path, const std::string& answers_path,
              const std::string& report_dir) {
    auto qa_pairs = cf::read_jsonl<cf::QAPair>(qa_path);
    std::map<std::string, std::string> raw_by_id;
    for (const auto& row : cf::read_jsonl_raw(answers_path))
        raw_by_id[row.at("qa_id").get<std::string>()] = row.at("raw").get<std::string>();

    std::vector<cf::GradeRecord> records;
    int missing = 0;
    for (const auto& qa : qa_pairs) {
        auto it = raw_by_id.find(qa.qa_id);
        if (it == raw_by_id.end()) {
            ++missing;
            records.push_back(cf::grade_pair(qa, ""));
        } else {
            records.push_back(cf::grade_pair(qa, it->second));
        }
    }

    std::filesystem::create_directories(report_dir);
    {
        std::ofstream grades(std::filesystem::path(report_dir) / "grades.jsonl",
                             std::ios::trunc);
        for (const auto& r : records) {
            nlohmann::json j = r;
            grades << j.dump() << "\n";
        }
    }
    cf::Report report = cf::aggregate(records);
    nlohmann::json rj = report;
    cf::write_file(std::filesystem::path(report_dir) / "report.json", rj.dump(2) + "\n");
    cf::print_report(report, std::cout);
    if (missing > 0) std::cout << "warning: " << missing << " unanswered items graded incorrect\n";
    return 0;
}

int cmd_stage_run(const std::string& config_path, bool resume, const std::string& corpus_override,
                  int stop_after) {
    cf::PipelineConfig config;
    if (!config_path.empty()) {
        try {
            config = nlohmann::json::parse(cf::read_file(config_path)).get<cf::PipelineConfig>();
        } catch (const nlohmann::json::exception& e) {
            cf::fail(cf::Errc::config, std::string("bad config: ") + e.what());
        }
        nlohmann::json raw = nlohmann::json::parse(cf::read_file(config_path));
        config.corpus_dir = raw.value("corpus_dir", std::string("corpus"));
    }
    if (!corpus_override.empty()) config.corpus_dir = corpus_override;
    config.debug_stop_after = stop_after;

    cf::StageState state;
    try {
        if (resume)
            state = cf::resume_pipeline(config.corpus_dir,
                                        config_path.empty()
                                            ? std::nullopt
                                            : std::optional<cf::PipelineConfig>(config),
                                        stop_after);
        else
            state = cf::run_pipeline(config);
    } catch (const cf::StopRequested&) {
        std::cout << "stopped early (debug hook)\n";
        return 0;
    }
    std::cout << "finished " << (state.stage_k - 1) << " stages into " << config.corpus_dir
              << "\n";
    for (std::size_t i = 0; i < state.counters.size(); ++i) {
        const auto& c = state.counters[i];
        std::cout << "  stage " << (i + 1) << ": generated " << c.generated << ", retained "
                  << c.retained << ", dropped " << c.dropped << ", qa " << c.qa_emitted << "\n";
    }
    return 0;
}

int cmd_report(const std::string& corpus_dir, bool as_json) {
    cf::RunReport report = cf::corpus_report(corpus_dir);
    if (as_json)
        std::cout << report.json.dump(2) << "\n";
    else
        std::cout << report.text;
    return 0;
}

int cmd_templates_export(const std::string& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : cf::builtin_templates()) {
        nlohmann::json types = nlohmann::json::array();
        for (auto ct : t.chart_types) types.push_back(cf::to_string(ct));
        arr.push_back({{"template_id", t.template_id},
                       {"chart_types", types},
                       {"paraphrases", t.paraphrases},
                       {"answer_kind", cf::to_string(t.answer_kind)},
                       {"retrieval_class", cf::to_string(t.retrieval)},
                       {"tolerance_rule",
                        t.tolerance == cf::ToleranceRule::AlwaysStrict
                            ? "strict"
                            : (t.tolerance == cf::ToleranceRule::ValueDependent
                                   ? "value-label-dependent"
                                   : "x-label-numeric")}});
    }
    cf::write_file(out, arr.dump(2) + "\n");
    std::cout << "wrote " << arr.size() << " template families to " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chartforge: self-training chart corpus synthesis"};
    app.require_subcommand(1);

    // seed synth / seed validate
    auto* seed = app.add_subcommand("seed", "seed catalog operations");
    seed->require_subcommand(1);
    auto* synth = seed->add_subcommand("synth", "synthesize a seed catalog");
    int synth_count = 1000;
    std::uint64_t synth_master = 1;
    std::string synth_out = "seeds.jsonl", synth_domains;
    synth->add_option("--count", synth_count, "number of seeds");
    synth->add_option("--master-seed", synth_master, "master RNG seed");
    synth->add_option("--out", synth_out, "output path")->required();
    synth->add_option("--domains", synth_domains, "comma-separated domain tags");

    auto* validate = seed->add_subcommand("validate", "validate a seed file");
    std::string validate_in;
    validate->add_option("--in", validate_in, "seed file")->required();

    auto* compose = app.add_subcommand("compose", "compose charts from seeds");
    std::string compose_seeds, compose_out = "specs.jsonl";
    int compose_count = 100;
    std::uint64_t compose_master = 1;
    compose->add_option("--seeds", compose_seeds, "seed file (empty: built-in synthesis)");
    compose->add_option("--count", compose_count, "charts to compose");
    compose->add_option("--master-seed", compose_master, "master RNG seed");
    compose->add_option("--out", compose_out, "output spec/ground-truth jsonl");

    auto* render = app.add_subcommand("render", "render chart specs to SVG");
    std::string render_specs, render_out = "charts";
    bool render_png = false;
    render->add_option("--specs", render_specs, "spec/ground-truth jsonl")->required();
    render->add_option("--out-dir", render_out, "output directory");
    render->add_flag("--png", render_png, "also write PNG rasters");

    auto* qa = app.add_subcommand("qa", "generate QA pairs for composed charts");
    std::string qa_specs, qa_out = "qa.jsonl";
    int qa_per_chart = 10;
    double qa_vcot = 0.2;
    std::uint64_t qa_master = 1;
    qa->add_option("--specs", qa_specs, "spec/ground-truth jsonl")->required();
    qa->add_option("--out", qa_out, "output qa jsonl");
    qa->add_option("--per-chart", qa_per_chart, "QA pairs per chart");
    qa->add_option("--vcot-ratio", qa_vcot, "vCoT mixing ratio");
    qa->add_option("--master-seed", qa_master, "master RNG seed");

    auto* evaluate = app.add_subcommand("evaluate", "answer QA pairs with an evaluator");
    std::string eval_specs, eval_qa, eval_binding = "oracle", eval_out = "answers.jsonl",
                             eval_transcripts;
    evaluate->add_option("--specs", eval_specs, "spec/ground-truth jsonl")->required();
    evaluate->add_option("--qa", eval_qa, "qa jsonl")->required();
    evaluate->add_option("--evaluator", eval_binding,
                         "oracle | noisy:<rate>[:<seed>] | remote:<url>[#model]");
    evaluate->add_option("--out", eval_out, "answers jsonl");
    evaluate->add_option("--transcripts", eval_transcripts, "transcript jsonl");

    auto* stage = app.add_subcommand("stage", "staged pipeline operations");
    stage->require_subcommand(1);
    auto* stage_run = stage->add_subcommand("run", "run the staged synthesis loop");
    std::string stage_config, stage_corpus;
    bool stage_resume = false;
    int stage_stop_after = 0;
    stage_run->add_option("--config", stage_config, "pipeline config json");
    stage_run->add_option("--corpus", stage_corpus, "corpus directory override");
    stage_run->add_flag("--resume", stage_resume, "resume from the last checkpoint");
    stage_run->add_option("--stop-after", stage_stop_after,
                          "abort after N charts (testing hook)");

    auto* grade = app.add_subcommand("grade", "grade model answers against QA gold");
    std::string grade_qa, grade_answers, grade_report = "report";
    grade->add_option("--qa", grade_qa, "qa jsonl")->required();
    grade->add_option("--answers", grade_answers, "answers jsonl")->required();
    grade->add_option("--report", grade_report, "report output directory");

    auto* report = app.add_subcommand("report", "summarize a corpus directory");
    std::string report_corpus;
    bool report_json = false;
    report->add_option("--corpus", report_corpus, "corpus directory")->required();
    report->add_flag("--json", report_json, "print JSON instead of text");

    auto* templates = app.add_subcommand("templates", "QA template table operations");
    templates->require_subcommand(1);
    auto* templates_export = templates->add_subcommand("export", "export the template table");
    std::string templates_out = "templates.json";
    templates_export->add_option("--out", templates_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (synth->parsed()) return cmd_seed_synth(synth_count, synth_master, synth_out,
                                                   synth_domains);
        if (validate->parsed()) return cmd_seed_validate(validate_in);
        if (compose->parsed())
            return cmd_compose(compose_seeds, compose_count, compose_master, compose_out);
        if (render->parsed()) return cmd_render(render_specs, render_out, render_png);
        if (qa->parsed()) return cmd_qa(qa_specs, qa_out, qa_per_chart, qa_vcot, qa_master);
        if (evaluate->parsed())
            return cmd_evaluate(eval_specs, eval_qa, eval_binding, eval_out, eval_transcripts);
        if (stage_run->parsed())
            return cmd_stage_run(stage_config, stage_resume, stage_corpus, stage_stop_after);
        if (grade->parsed()) return cmd_grade(grade_qa, grade_answers, grade_report);
        if (report->parsed()) return cmd_report(report_corpus, report_json);
        if (templates_export->parsed()) return cmd_templates_export(templates_out);
    } catch (const cf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
