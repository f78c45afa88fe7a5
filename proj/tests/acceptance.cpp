// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chartforge/pipeline.hpp"
#include "grade_fixture.hpp"
#include "stub_server.hpp"
#include "testutil.hpp"

using namespace chartforge;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << name << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "[FAIL] criterion " << number << ": " << name << " — " << e.what()
                  << "\n";
    }
    std::cout.flush();
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::map<std::string, std::string> read_tree(const std::string& dir) {
    std::map<std::string, std::string> out;
    for (auto& e : std::filesystem::recursive_directory_iterator(dir))
        if (e.is_regular_file())
            out[std::filesystem::relative(e.path(), dir).string()] = read_file(e.path());
    return out;
}

PipelineConfig full_config(const std::string& dir_name) {
    PipelineConfig config;
    config.master_seed = 1717;
    config.stages = 3;
    config.charts_per_stage = 500;
    config.qa_per_chart = 10;
    config.checkpoint_every = 50;
    config.synth_seed_count = 200;
    config.corpus_dir = testutil::temp_dir(dir_name).string();
    config.evaluator.kind = BindingKind::Oracle;
    config.has_previous = true;
    config.previous_evaluator.kind = BindingKind::Oracle;
    return config;
}

// Independent gold re-derivation for criterion 10: direct table scans over
// the ground truth, written separately from the production derive_answer.
std::string independent_answer(const QAPair& qa, const GroundTruth& gt) {
    const auto& b = qa.bindings;
    auto bind = [&](const char* k) { return b.at(k); };
    auto fmt = [&](double v, int p) { return fmt_fixed(v, p); };
    auto find_by_color = [&](const std::string& color) {
        for (const auto& label : gt.series_order)
            if (gt.visual_map.at(label).color_name == color) return label;
        throw std::runtime_error("color not found");
    };
    auto series_max = [&](const std::string& label) {
        double best = -1e300;
        std::string arg;
        for (const auto& x : gt.x_order) {
            double v = gt.data_table.at(label).at(x);
            if (v > best) {
                best = v;
                arg = x;
            }
        }
        return std::make_pair(arg, best);
    };
    auto series_min = [&](const std::string& label) {
        double best = 1e300;
        std::string arg;
        for (const auto& x : gt.x_order) {
            double v = gt.data_table.at(label).at(x);
            if (v < best) {
                best = v;
                arg = x;
            }
        }
        return std::make_pair(arg, best);
    };
    auto sorted_at = [&](const std::string& x) {
        std::vector<double> vals;
        for (const auto& label : gt.series_order) vals.push_back(gt.data_table.at(label).at(x));
        std::sort(vals.begin(), vals.end());
        std::vector<std::string> parts;
        for (double v : vals) parts.push_back(fmt(v, gt.precision));
        return join(parts, ", ");
    };

    const std::string& id = qa.template_id;
    if (id == "value-at-label")
        return fmt(gt.data_table.at(bind("legend_label")).at(bind("xlabel")), gt.precision);
    if (id == "legend-for-value-at-x") {
        double target = std::strtod(bind("value_label").c_str(), nullptr);
        for (const auto& label : gt.series_order)
            if (gt.data_table.at(label).at(bind("xlabel")) == target) return label;
        throw std::runtime_error("no match");
    }
    if (id == "values-bottom-to-top" || id == "values-ascending")
        return sorted_at(bind("xlabel"));
    if (id == "values-ascending-left-of") {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < gt.x_order.size(); ++i)
            if (gt.x_order[i] == bind("xlabel")) pos = i;
        std::set<std::string> shown(gt.shown_x_labels.begin(), gt.shown_x_labels.end());
        for (std::size_t i = pos; i-- > 0;)
            if (shown.count(gt.x_order[i])) return sorted_at(gt.x_order[i]);
        throw std::runtime_error("no predecessor");
    }
    if (id == "legend-by-line-visual") {
        for (const auto& label : gt.series_order) {
            const auto& vis = gt.visual_map.at(label);
            if (vis.color_name == bind("line_color") && vis.style_name == bind("line_style"))
                return label;
        }
        throw std::runtime_error("no visual match");
    }
    if (id == "line-style-of-legend") return gt.visual_map.at(bind("legend_label")).style_name;
    if (id == "nth-point-on-line") {
        std::string label = find_by_color(bind("line_color"));
        int n = std::atoi(bind("n").c_str());
        return fmt(gt.data_table.at(label).at(gt.x_order[static_cast<std::size_t>(n - 1)]),
                   gt.precision);
    }
    if (id == "lines-below-count") {
        double v = gt.data_table.at(bind("legend_label")).at(bind("xlabel"));
        int below = 0;
        for (const auto& other : gt.series_order)
            if (other != bind("legend_label") &&
                gt.data_table.at(other).at(bind("xlabel")) < v)
                ++below;
        return std::to_string(below);
    }
    if (id == "peak-x-of-legend") return series_max(bind("legend_label")).first;
    if (id == "trough-x-of-legend") return series_min(bind("legend_label")).first;
    if (id == "peak-x-by-visual") return series_max(find_by_color(bind("line_color"))).first;
    if (id == "trough-x-by-visual") return series_min(find_by_color(bind("line_color"))).first;
    if (id == "nth-bar-from-left") {
        std::string label = find_by_color(bind("line_color"));
        int n = std::atoi(bind("n").c_str());
        return fmt(gt.data_table.at(label).at(gt.x_order[static_cast<std::size_t>(n - 1)]),
                   gt.precision);
    }
    if (id == "nth-bar-from-bottom") {
        std::string label = find_by_color(bind("line_color"));
        int n = std::atoi(bind("n").c_str());
        return fmt(gt.data_table.at(label).at(gt.x_order[gt.x_order.size() -
                                                         static_cast<std::size_t>(n)]),
                   gt.precision);
    }
    if (id == "longest-bar-of-color")
        return fmt(series_max(find_by_color(bind("line_color"))).second, gt.precision);
    if (id == "shortest-bar-of-color")
        return fmt(series_min(find_by_color(bind("line_color"))).second, gt.precision);
    if (id == "sector-count" || id == "legend-count")
        return std::to_string(gt.series_order.size());
    if (id == "sector-share-by-label")
        return fmt(gt.data_table.at(bind("sector_label")).at(bind("sector_label")),
                   gt.precision);
    if (id == "sector-share-by-color") {
        std::string label = find_by_color(bind("name_color"));
        return fmt(gt.data_table.at(label).at(label), gt.precision);
    }
    if (id == "largest-sector-share" || id == "smallest-sector-share") {
        bool largest = id == "largest-sector-share";
        double best = largest ? -1e300 : 1e300;
        for (const auto& label : gt.series_order) {
            double v = gt.data_table.at(label).at(label);
            best = largest ? std::max(best, v) : std::min(best, v);
        }
        return fmt(best, gt.precision);
    }
    if (id == "scatter-y-at-x")
        return fmt(gt.data_table.at(bind("legend_name")).at(bind("x_value")), gt.precision);
    if (id == "scatter-x-at-y") {
        double target = std::strtod(bind("y_value").c_str(), nullptr);
        for (const auto& x : gt.x_order)
            if (gt.data_table.at(bind("legend_name")).at(x) == target)
                return fmt(std::strtod(x.c_str(), nullptr), 0);
        throw std::runtime_error("no y match");
    }
    if (id == "distinct-color-count") {
        std::set<std::string> colors;
        for (const auto& label : gt.series_order)
            colors.insert(gt.visual_map.at(label).color_name);
        return std::to_string(colors.size());
    }
    if (id == "scatter-peak-x")
        return fmt(std::strtod(series_max(bind("legend_name")).first.c_str(), nullptr), 0);
    if (id == "scatter-trough-x")
        return fmt(std::strtod(series_min(bind("legend_name")).first.c_str(), nullptr), 0);
    if (id == "scatter-legend-for-xy") {
        double target = std::strtod(bind("y_value").c_str(), nullptr);
        for (const auto& label : gt.series_order)
            if (gt.data_table.at(label).at(bind("x_value")) == target) return label;
        throw std::runtime_error("no xy match");
    }
    throw std::runtime_error("unknown template " + id);
}

} // namespace

int main() {
    std::cout << "acceptance suite\n";
    const PaletteTable palettes;

    // Shared artifacts for criteria 1, 4 and 12.
    PipelineConfig run_a = full_config("acc_run_a");
    double run_seconds = 0;

    criterion(1, "determinism: two full 3-stage runs are byte-identical and fast enough", [&] {
        auto t0 = std::chrono::steady_clock::now();
        run_pipeline(run_a);
        run_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        PipelineConfig run_b = full_config("acc_run_b");
        run_pipeline(run_b);

        auto ta = read_tree(run_a.corpus_dir), tb = read_tree(run_b.corpus_dir);
        require(ta.size() == tb.size(), "file sets differ");
        for (const auto& [name, bytes] : ta) {
            require(tb.count(name) == 1, "missing file " + name);
            require(bytes == tb.at(name), "file differs: " + name);
        }
        require(run_seconds <= 600.0,
                "3x500 run took " + fmt_fixed(run_seconds, 1) + "s, budget is 600s");
        std::filesystem::remove_all(run_b.corpus_dir);
    });

    criterion(2, "tick-omission branches fit 25/50/25 at alpha 0.01", [&] {
        SeedCatalog catalog = synthesize_catalog(99, 300);
        std::vector<const ChartSeed*> continuous;
        for (const auto& seed : catalog.seeds)
            if (seed.x_axis.kind != LabelKind::Categorical && seed.chart_type != ChartType::Pie)
                continuous.push_back(&seed);
        require(!continuous.empty(), "no continuous-axis seeds");
        long long counts[3] = {0, 0, 0};
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            const ChartSeed& seed = *continuous[static_cast<std::size_t>(i) % continuous.size()];
            ChartPair pair = compose_chart(
                seed, palettes,
                StreamPath(5150).tag("ticks").tag(static_cast<std::uint64_t>(i)).seed());
            counts[pair.spec.tick_branch]++;
        }
        double expected[3] = {0.25 * n, 0.50 * n, 0.25 * n};
        double chi2 = 0;
        for (int b = 0; b < 3; ++b)
            chi2 += (counts[b] - expected[b]) * (counts[b] - expected[b]) / expected[b];
        // df = 2, alpha = 0.01 -> critical value 9.21034.
        require(chi2 < 9.21034, "chi-square " + fmt_fixed(chi2, 3) + " rejects 25/50/25");
        for (int b = 0; b < 3; ++b) {
            double frac = static_cast<double>(counts[b]) / n;
            double target = b == 1 ? 0.50 : 0.25;
            require(std::fabs(frac - target) <= 0.02,
                    "branch " + std::to_string(b) + " frequency " + fmt_fixed(frac, 3));
        }
    });

    criterion(3, "vCoT fraction is 0.20 +- 0.01 over 10,000+ pairs", [&] {
        SeedCatalog catalog = synthesize_catalog(7, 120);
        long long total = 0, vcot = 0;
        for (std::uint64_t i = 0; total < 10000; ++i) {
            const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
            ChartPair pair =
                compose_chart(seed, palettes, StreamPath(606).tag("vcot").tag(i).seed());
            Rng rng = stream_rng(606, "vcot-batch", i);
            QABatch batch = generate_qa_batch(pair.gt, pair.spec, 10, 0.2, rng);
            for (const auto& qa : batch.pairs) {
                ++total;
                if (qa.form == QAForm::VCot) {
                    ++vcot;
                    require(!qa.cot_text.empty(), "vcot pair without narrative");
                }
            }
        }
        double fraction = static_cast<double>(vcot) / static_cast<double>(total);
        require(std::fabs(fraction - 0.20) <= 0.01,
                "vcot fraction " + fmt_fixed(fraction, 4) + " over " + std::to_string(total));
    });

    criterion(4, "oracle closure: all items correct, zero drops, all deltas zero", [&] {
        CorpusPaths paths(run_a.corpus_dir);
        auto eval_rows = read_jsonl_raw(paths.eval_log());
        require(!eval_rows.empty(), "empty eval log");
        long long battery_items = 0;
        for (const auto& row : eval_rows) {
            EvalBattery battery = row.at("battery").get<EvalBattery>();
            auto answers = row.at("answers_current").get<std::vector<std::string>>();
            require(answers.size() == battery.items.size(), "answer misalignment");
            for (std::size_t i = 0; i < battery.items.size(); ++i) {
                require(grade_raw(answers[i], battery.items[i].gold,
                                  battery.items[i].tolerance),
                        "battery item graded incorrect: " + battery.items[i].item_id);
                ++battery_items;
            }
            require(row.at("action").get<std::string>() == "none",
                    "non-none action " + row.at("action").get<std::string>());
            require(row.at("delta_value").get<double>() == 0.0, "nonzero value delta");
            require(row.at("delta_visual").get<double>() == 0.0, "nonzero visual delta");
            require(row.at("score").at("identity_pass").get<bool>(), "identity drop");
        }
        // QA pairs answered by the oracle and graded.
        std::map<std::string, GroundTruth> gts;
        for (const auto& rec : read_jsonl_raw(paths.specs()))
            gts[rec.at("spec").at("chart_id").get<std::string>()] =
                rec.at("ground_truth").get<GroundTruth>();
        auto qa_pairs = read_jsonl<QAPair>(paths.qa());
        require(!qa_pairs.empty(), "no qa pairs");
        for (const auto& qa : qa_pairs) {
            const GroundTruth& gt = gts.at(qa.chart_id);
            std::string answer = oracle_answer(gt, qa);
            require(grade_raw(answer, qa.gold, qa.tolerance),
                    "oracle answer graded incorrect for " + qa.qa_id);
        }
        std::cout << "         (" << battery_items << " battery items, " << qa_pairs.size()
                  << " qa pairs)\n";
    });

    criterion(5, "noisy oracle at rate 1.0 drops 100% of charts", [&] {
        PipelineConfig config = full_config("acc_drop");
        config.stages = 1;
        config.charts_per_stage = 100;
        config.evaluator.kind = BindingKind::NoisyOracle;
        config.evaluator.error_rate = 1.0;
        config.evaluator.noise_seed = 21;
        config.has_previous = false;
        StageState state = run_pipeline(config);
        require(state.counters[0].dropped == 100, "expected 100 drops, got " +
                                                      std::to_string(state.counters[0].dropped));
        require(state.counters[0].retained == 0, "retained charts in an all-drop stage");
        require(read_jsonl_raw(CorpusPaths(config.corpus_dir).specs()).empty(),
                "stage output corpus not empty");
        std::filesystem::remove_all(config.corpus_dir);
    });

    criterion(6, "strict/flex grader reproduces the hand-graded fixture", [&] {
        auto rows = grade_fixture::rows();
        require(rows.size() >= 50, "fixture smaller than 50 records");
        for (const auto& row : rows)
            require(grade_raw(row.raw, row.gold, row.tolerance) == row.expect_correct,
                    std::string("fixture row failed: ") + row.note);
        // The four named spec cases, asserted explicitly.
        require(!grade_raw("1995", Answer::number(2008, 0), Tolerance::Strict), "year case");
        require(grade_raw("104", Answer::number(100, 0), Tolerance::Flex), "4% case");
        require(!grade_raw("106", Answer::number(100, 0), Tolerance::Flex), "6% case");
        require(grade_raw("1e-12", Answer::number(0, 1), Tolerance::Flex), "zero-gold case");
    });

    criterion(7, "render consistency holds for 1,000 charts", [&] {
        SeedCatalog catalog = synthesize_catalog(31, 150);
        for (int i = 0; i < 1000; ++i) {
            const ChartSeed& seed = catalog.seeds[static_cast<std::size_t>(i) %
                                                  catalog.seeds.size()];
            ChartPair pair = compose_chart(
                seed, palettes,
                StreamPath(808).tag("render").tag(static_cast<std::uint64_t>(i)).seed());
            std::string svg = render_svg(pair.spec);
            auto groups = testutil::parse_series_groups(svg);
            require(groups.size() == pair.spec.series.size(), "series count mismatch");
            for (std::size_t s = 0; s < groups.size(); ++s) {
                require(groups[s].label == pair.spec.series[s].label, "series order mismatch");
                require(groups[s].color == pair.spec.series[s].rgb.css(), "color mismatch");
            }
            auto legend = testutil::parse_legend_order(svg);
            require(legend == pair.gt.series_order, "legend order mismatch");

            if (pair.spec.chart_type == ChartType::Bar && !pair.spec.stacked) {
                double unit = layout(pair.spec).plot.h /
                              (pair.spec.axis_max - pair.spec.axis_min);
                for (std::size_t s = 0; s < groups.size(); ++s) {
                    const auto& vals = pair.spec.values.at(groups[s].label);
                    require(groups[s].bars.size() == vals.size(), "bar count mismatch");
                    for (std::size_t k = 0; k < vals.size(); ++k)
                        require(std::fabs(groups[s].bars[k].h - vals[k] * unit) <= 0.5,
                                "bar height off by more than 0.5 px");
                }
            }
            if (pair.spec.chart_type == ChartType::Pie) {
                LayoutModel m = layout(pair.spec);
                double total = 0;
                for (std::size_t s = 0; s < m.series.size(); ++s) {
                    double span = m.series[s].sector_end_deg - m.series[s].sector_start_deg;
                    double share = pair.spec.values.at(pair.spec.series[s].label)[0];
                    require(std::fabs(span - share * 3.6) <= 1e-9, "sector angle mismatch");
                    total += span;
                }
                require(std::fabs(total - 360.0) <= 1e-9, "sector angles do not close");
            }
        }
    });

    criterion(8, "action invariants hold over 1,000+ applied actions", [&] {
        SeedCatalog catalog = synthesize_catalog(47, 150);
        long long applied = 0;
        for (std::uint64_t i = 0; applied < 1000; ++i) {
            const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
            ChartPair pair =
                compose_chart(seed, palettes, StreamPath(42).tag("act").tag(i).seed());
            std::vector<ActionKind> actions = applicable_vaem(pair.spec, seed, palettes);
            for (ActionKind a : applicable_viem(pair.spec, palettes)) actions.push_back(a);
            for (ActionKind action : actions) {
                Rng rng = stream_rng(42, "act-rng", i, static_cast<std::uint64_t>(action));
                auto out = apply_action(pair.spec, pair.gt, action, seed, palettes, rng);
                require(out.has_value(), "applicable action returned empty");
                ValidationReport report = validate_pair(out->spec, out->gt);
                require(report.ok(), "action output failed validation: " + report.summary());
                require(out->spec.chart_type == pair.spec.chart_type, "chart type changed");
                require(out->spec.seed_id == pair.spec.seed_id, "seed id changed");
                if (is_viem(action))
                    require(out->gt.data_table == pair.gt.data_table,
                            "viem changed the data table: " + to_string(action));
                if (action == ActionKind::VaChangeNumScale) {
                    for (const auto& [label, ext] : pair.gt.extrema) {
                        require(out->gt.extrema.at(label).max_label == ext.max_label,
                                "argmax changed under rescale");
                        require(out->gt.extrema.at(label).min_label == ext.min_label,
                                "argmin changed under rescale");
                    }
                }
                ++applied;
            }
        }
        std::cout << "         (" << applied << " actions applied)\n";
    });

    criterion(9, "range safety: values in range, pies sum to 100", [&] {
        SeedCatalog catalog = synthesize_catalog(61, 150);
        for (int i = 0; i < 2000; ++i) {
            const ChartSeed& seed = catalog.seeds[static_cast<std::size_t>(i) %
                                                  catalog.seeds.size()];
            ChartPair pair = compose_chart(
                seed, palettes,
                StreamPath(911).tag("range").tag(static_cast<std::uint64_t>(i)).seed());
            for (const auto& [label, vals] : pair.spec.values)
                for (double v : vals)
                    require(v >= seed.value_lo - 1e-12 && v <= seed.value_hi + 1e-12,
                            "value outside seed range");
            if (pair.spec.chart_type == ChartType::Pie) {
                double sum = 0;
                for (const auto& [label, vals] : pair.spec.values) sum += vals[0];
                require(std::fabs(sum - 100.0) <= 1e-6, "pie sum off: " + fmt_fixed(sum, 9));
            }
        }
    });

    criterion(10, "template coverage and independent gold re-derivation", [&] {
        SeedCatalog catalog = synthesize_catalog(73, 150);
        std::map<std::string, int> coverage;
        long long pairs_checked = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
            ChartPair pair =
                compose_chart(seed, palettes, StreamPath(313).tag("cov").tag(i).seed());
            Rng rng = stream_rng(313, "cov-batch", i);
            QABatch batch = generate_qa_batch(pair.gt, pair.spec, 10, 0.2, rng);
            for (const auto& qa : batch.pairs) {
                coverage[qa.template_id]++;
                std::string independent = independent_answer(qa, pair.gt);
                require(independent == qa.gold.canonical(),
                        "gold mismatch for " + qa.template_id + ": got " +
                            qa.gold.canonical() + ", expected " + independent);
                ++pairs_checked;
            }
        }
        for (const auto& t : builtin_templates())
            require(coverage[t.template_id] >= 10,
                    "family " + t.template_id + " instantiated only " +
                        std::to_string(coverage[t.template_id]) + " times");
        std::cout << "         (" << pairs_checked << " golds re-derived, "
                  << coverage.size() << " families)\n";
    });

    criterion(11, "gateway survives 20% transient failures without losing items", [&] {
        testutil::StubServer server(0.2, 777);
        EvaluatorBinding binding;
        binding.kind = BindingKind::Remote;
        binding.endpoint_url = server.url();
        binding.model = "stub";
        binding.retry_budget = 4;
        binding.backoff_initial_ms = 2;
        binding.max_concurrent = 8;
        Evaluator evaluator(binding);

        std::vector<EvalQuery> queries(200);
        for (int i = 0; i < 200; ++i) {
            queries[static_cast<std::size_t>(i)].id = "item-" + std::to_string(i);
            queries[static_cast<std::size_t>(i)].question = "q #" + std::to_string(i);
        }
        std::vector<Transcript> transcripts;
        auto answers = evaluator.ask_many("img", queries, [&](const Transcript& t) {
            transcripts.push_back(t);
        });
        require(answers.size() == 200, "lost answers");
        for (const auto& a : answers) require(a == "42", "lost item");
        require(transcripts.size() == 200, "transcripts incomplete");
        for (const auto& [question, count] : server.requests_per_question())
            require(count <= 1 + binding.retry_budget,
                    "item exceeded retry budget: " + question);
    });

    criterion(12, "an interrupted run resumes byte-identically", [&] {
        PipelineConfig cut = full_config("acc_resume");
        cut.debug_stop_after = 700; // mid stage 2, between checkpoints
        bool stopped = false;
        try {
            run_pipeline(cut);
        } catch (const StopRequested&) {
            stopped = true;
        }
        require(stopped, "debug stop did not fire");
        StageState state = resume_pipeline(cut.corpus_dir);
        require(state.finished, "resume did not finish");
        auto ta = read_tree(run_a.corpus_dir), tb = read_tree(cut.corpus_dir);
        require(ta.size() == tb.size(), "file sets differ after resume");
        for (const auto& [name, bytes] : ta)
            require(tb.count(name) == 1 && bytes == tb.at(name),
                    "file differs after resume: " + name);
        std::filesystem::remove_all(cut.corpus_dir);
    });

    std::filesystem::remove_all(run_a.corpus_dir);
    if (g_failures == 0) {
        std::cout << "all 12 acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
