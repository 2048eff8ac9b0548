// mgtd: machine-generated text detection pipeline.
// Subcommands: featurize, train, predict, vote, evaluate.

#include "mgtd/classifiers.hpp"
#include "mgtd/corpus.hpp"
#include "mgtd/ensemble.hpp"
#include "mgtd/errors.hpp"
#include "mgtd/eval.hpp"
#include "mgtd/preprocess.hpp"
#include "mgtd/readability.hpp"
#include "mgtd/util.hpp"
#include "mgtd/vectorizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct PipelineOptions {
    bool no_strip_urls = false;
    bool no_collapse_whitespace = false;
    bool no_strip_punctuation = false;
    bool no_drop_stopwords = false;
    bool no_drop_numbers = false;
    bool no_decode_emoji = false;
    bool no_lemmatize = false;
    bool no_lowercase = false;
    std::string stopwords_path;
    std::string lemma_path;
    std::string emoji_path;

    void register_flags(CLI::App* cmd) {
        cmd->add_flag("--no-strip-urls", no_strip_urls, "Keep URLs");
        cmd->add_flag("--no-collapse-whitespace", no_collapse_whitespace, "Keep whitespace runs");
        cmd->add_flag("--no-strip-punctuation", no_strip_punctuation, "Keep punctuation");
        cmd->add_flag("--no-drop-stopwords", no_drop_stopwords, "Keep stopwords");
        cmd->add_flag("--no-drop-numbers", no_drop_numbers, "Keep digits");
        cmd->add_flag("--no-decode-emoji", no_decode_emoji, "Strip emoji instead of decoding");
        cmd->add_flag("--no-lemmatize", no_lemmatize, "Skip lemmatization");
        cmd->add_flag("--no-lowercase", no_lowercase, "Skip lowercasing");
        cmd->add_option("--stopwords", stopwords_path, "Stopword list file (one per line)");
        cmd->add_option("--lemma-exceptions", lemma_path, "Lemma exception file (form<TAB>lemma)");
        cmd->add_option("--emoji-table", emoji_path, "Emoji name file (emoji<TAB>name)");
    }

    mgtd::PipelineConfig build() const {
        mgtd::PipelineConfig config = mgtd::PipelineConfig::defaults();
        auto disabled = [&](mgtd::Step step) {
            switch (step) {
                case mgtd::Step::strip_urls: return no_strip_urls;
                case mgtd::Step::collapse_whitespace: return no_collapse_whitespace;
                case mgtd::Step::strip_punctuation: return no_strip_punctuation;
                case mgtd::Step::drop_stopwords: return no_drop_stopwords;
                case mgtd::Step::drop_numbers: return no_drop_numbers;
                case mgtd::Step::decode_emoji: return no_decode_emoji;
                case mgtd::Step::lemmatize: return no_lemmatize;
                case mgtd::Step::lowercase: return no_lowercase;
            }
            return false;
        };
        std::vector<mgtd::Step> steps;
        for (mgtd::Step step : config.steps) {
            if (!disabled(step)) steps.push_back(step);
        }
        config.steps = std::move(steps);
        if (!stopwords_path.empty()) config.stopwords = mgtd::load_stopwords(stopwords_path);
        if (!lemma_path.empty()) config.lemma_exceptions = mgtd::load_lemma_exceptions(lemma_path);
        if (!emoji_path.empty()) config.emoji_names = mgtd::load_emoji_names(emoji_path);
        return config;
    }
};

mgtd::LabelSpace space_for_task(const std::string& task) {
    if (task == "a-mono" || task == "a-multi" || task == "a") return mgtd::LabelSpace::binary();
    if (task == "b") return mgtd::LabelSpace::multiclass();
    throw mgtd::input_error("unknown task '" + task + "' (expected a-mono, a-multi, or b)");
}

void add_task_option(CLI::App* cmd, std::string& task) {
    cmd->add_option("--task", task, "Task: a-mono, a-multi (binary) or b (multi-class)")
        ->default_val("a-mono");
}

// Featurization shared by train and predict.
std::vector<mgtd::FeatureVector> featurize_docs(const mgtd::DatasetSplit& split,
                                                const mgtd::PipelineConfig& pipeline,
                                                const mgtd::Vocabulary& vocab, unsigned threads) {
    std::vector<mgtd::FeatureVector> features(split.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const mgtd::Document& doc = split.documents[i];
            mgtd::ReadabilityStats stats = mgtd::analyze(doc.text);
            std::vector<std::string> tokens = mgtd::tokenize(mgtd::clean(doc.text, pipeline));
            features[i] = mgtd::transform(tokens, vocab, stats);
        }
    };
    if (threads <= 1 || split.size() < 64) {
        work(0, split.size());
    } else {
        unsigned workers = std::min<unsigned>(threads, std::thread::hardware_concurrency());
        workers = std::max(1u, workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = split.size() * w / workers;
            std::size_t hi = split.size() * (w + 1) / workers;
            pool.emplace_back(work, lo, hi);
        }
        for (std::thread& th : pool) th.join();
    }
    return features;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw mgtd::io_error("cannot write '" + path + "'");
    return file;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

int cmd_featurize(const std::string& input, const std::string& out, const std::string& task) {
    mgtd::LabelSpace space = space_for_task(task);
    mgtd::DatasetSplit split = mgtd::load_jsonl(input, space, /*labels_required=*/false);
    std::ofstream file;
    std::ostream& os = open_output(file, out);
    os << "id,words,sentences,syllables,complex,fog,flesch\n";
    for (const mgtd::Document& doc : split.documents) {
        mgtd::ReadabilityStats s = mgtd::analyze(doc.text);
        os << csv_field(doc.id) << ',' << s.words << ',' << s.sentences << ',' << s.syllables
           << ',' << s.complex_words << ',' << mgtd::double_to_decimal(s.gunning_fog) << ','
           << mgtd::double_to_decimal(s.flesch) << '\n';
    }
    return 0;
}

struct TrainOptions {
    std::string task = "a-mono";
    std::string model = "logreg";
    std::string train_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    mgtd::VectorizerConfig vectorizer;
    mgtd::LogRegParams logreg;
    double nb_alpha = 1.0;
    mgtd::GbdtParams gbdt;
};

int cmd_train(const TrainOptions& opt, const PipelineOptions& pipeline_opt) {
    mgtd::LabelSpace space = space_for_task(opt.task);
    mgtd::ModelKind kind = mgtd::model_kind_from_name(opt.model);
    mgtd::PipelineConfig pipeline = pipeline_opt.build();

    mgtd::DatasetSplit train = mgtd::load_jsonl(opt.train_path, space, /*labels_required=*/true);
    if (train.documents.empty()) {
        throw mgtd::train_error("training file '" + opt.train_path + "' has no documents");
    }

    // Vocabulary is fit on the training split only.
    std::vector<std::vector<std::string>> token_docs(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
        token_docs[i] = mgtd::tokenize(mgtd::clean(train.documents[i].text, pipeline));
    }
    mgtd::Vocabulary vocab = mgtd::fit_vocabulary(token_docs, opt.vectorizer);

    std::vector<mgtd::FeatureVector> X = featurize_docs(train, pipeline, vocab, opt.threads);
    std::vector<int> y(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) y[i] = *train.documents[i].label;

    mgtd::TrainedModel model;
    model.kind = kind;
    model.labels = space;
    model.feature_dim = vocab.size() + 2;
    model.vocab_checksum = vocab.checksum();
    model.seed = opt.seed;
    switch (kind) {
        case mgtd::ModelKind::logistic_regression:
            model.model = mgtd::train_logreg(X, y, space.size(), opt.logreg);
            break;
        case mgtd::ModelKind::naive_bayes:
            model.model = mgtd::train_nb(X, y, space.size(), opt.nb_alpha);
            break;
        case mgtd::ModelKind::boosted_trees:
            model.model = mgtd::train_gbdt(X, y, space.size(), opt.gbdt, opt.threads);
            break;
    }

    fs::create_directories(opt.out_dir);
    std::string vocab_path = (fs::path(opt.out_dir) / "vocab.json").string();
    std::string model_path = (fs::path(opt.out_dir) / "model.json").string();
    mgtd::save_vocabulary(vocab, vocab_path);
    mgtd::save_model(model, model_path);

    std::size_t correct = 0;
    double nll = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::vector<double> probs = mgtd::predict_proba(model, X[i]);
        if (mgtd::predict_label(model, X[i]) == y[i]) ++correct;
        nll -= std::log(std::max(probs[static_cast<std::size_t>(y[i])], 1e-300));
    }
    std::cout << "model: " << mgtd::model_kind_name(kind) << "  classes: " << space.size()
              << "  features: " << vocab.size() << " (+2 readability)\n";
    std::cout << "train accuracy: " << static_cast<double>(correct) / static_cast<double>(X.size())
              << "  train logloss: " << nll / static_cast<double>(X.size()) << "\n";
    std::cout << "wrote " << vocab_path << " (" << vocab.checksum() << ")\n";
    std::cout << "wrote " << model_path << "\n";
    return 0;
}

int cmd_predict(const std::string& model_path, const std::string& vocab_path,
                const std::string& input, const std::string& out, bool with_proba,
                unsigned threads, const PipelineOptions& pipeline_opt) {
    mgtd::Vocabulary vocab = mgtd::load_vocabulary(vocab_path);
    mgtd::TrainedModel model = mgtd::load_model(model_path);
    if (model.vocab_checksum != vocab.checksum()) {
        throw mgtd::artifact_error("vocabulary/model pairing mismatch: model was trained against " +
                                   model.vocab_checksum + ", vocabulary is " + vocab.checksum());
    }
    mgtd::PipelineConfig pipeline = pipeline_opt.build();
    mgtd::DatasetSplit split = mgtd::load_jsonl(input, model.labels, /*labels_required=*/false);
    std::vector<mgtd::FeatureVector> X = featurize_docs(split, pipeline, vocab, threads);

    std::ofstream file;
    std::ostream& os = open_output(file, out);
    for (std::size_t i = 0; i < split.size(); ++i) {
        json obj;
        obj["id"] = split.documents[i].id;
        std::vector<double> probs = mgtd::predict_proba(model, X[i]);
        obj["label"] = static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                                        probs.begin());
        if (with_proba) obj["proba"] = probs;
        os << obj.dump() << '\n';
    }
    return 0;
}

int cmd_vote(const std::vector<std::string>& files, const std::string& task,
             const std::string& policy_name, const std::string& out,
             const std::string& report_path) {
    mgtd::LabelSpace space = space_for_task(task);
    mgtd::TiePolicy policy = mgtd::TiePolicy::lowest_class;
    if (policy_name == "first-classifier") {
        policy = mgtd::TiePolicy::first_classifier;
    } else if (policy_name != "lowest-class") {
        throw mgtd::input_error("unknown tie policy '" + policy_name + "'");
    }
    std::vector<mgtd::VoteInput> inputs;
    inputs.reserve(files.size());
    for (const std::string& file : files) {
        inputs.push_back(mgtd::load_external_predictions(file, space));
    }
    mgtd::VoteResult result = mgtd::majority_vote(inputs, space, policy);

    std::ofstream file;
    std::ostream& os = open_output(file, out);
    for (const mgtd::Vote& vote : result.votes) {
        json obj;
        obj["id"] = vote.id;
        obj["label"] = vote.label;
        os << obj.dump() << '\n';
    }
    if (!report_path.empty()) mgtd::save_vote_report(result, report_path);
    return 0;
}

int cmd_evaluate(const std::vector<std::string>& preds, const std::string& gold_path,
                 const std::string& task, const std::string& format,
                 const std::string& group_by) {
    mgtd::LabelSpace space = space_for_task(task);
    mgtd::DatasetSplit gold = mgtd::load_jsonl(gold_path, space, /*labels_required=*/true);

    mgtd::Comparison comparison;
    for (const std::string& spec : preds) {
        std::string name = spec;
        std::string path = spec;
        auto eq = spec.find('=');
        if (eq != std::string::npos && eq > 0) {
            name = spec.substr(0, eq);
            path = spec.substr(eq + 1);
        } else {
            name = fs::path(spec).stem().string();
        }
        mgtd::VoteInput input = mgtd::load_external_predictions(path, space);
        comparison.rows.emplace_back(name, mgtd::score(input.predictions, gold, space));
    }

    if (comparison.rows.size() == 1) {
        const mgtd::EvalReport& report = comparison.rows[0].second;

        std::map<std::string, mgtd::EvalReport> group_reports;
        std::map<std::string, std::size_t> group_sizes;
        if (!group_by.empty()) {
            if (group_by != "model" && group_by != "source") {
                throw mgtd::input_error("--group-by expects 'model' or 'source'");
            }
            std::map<std::string, mgtd::DatasetSplit> groups;
            for (const mgtd::Document& doc : gold.documents) {
                std::string key = group_by == "model" ? doc.model.value_or("(none)") : doc.source;
                if (key.empty()) key = "(none)";
                groups[key].documents.push_back(doc);
            }
            std::string path = preds[0];
            auto eq = path.find('=');
            if (eq != std::string::npos && eq > 0) path = path.substr(eq + 1);
            mgtd::VoteInput input = mgtd::load_external_predictions(path, space);
            for (const auto& [key, split] : groups) {
                std::unordered_map<std::string, int> subset;
                for (const mgtd::Document& doc : split.documents) {
                    subset[doc.id] = input.predictions.at(doc.id);
                }
                group_reports.emplace(key, mgtd::score(subset, split, space));
                group_sizes.emplace(key, split.size());
            }
        }

        if (format == "json") {
            json obj = mgtd::report_json(report, space);
            if (!group_reports.empty()) {
                json groups = json::object();
                for (const auto& [key, r] : group_reports) {
                    groups[key] = {{"documents", group_sizes.at(key)},
                                   {"accuracy", r.accuracy},
                                   {"macro_f1", r.macro_f1}};
                }
                obj["by_" + group_by] = std::move(groups);
            }
            std::cout << obj.dump(2) << "\n";
        } else {
            std::cout << mgtd::report_text(report, space);
            if (!group_reports.empty()) {
                std::cout << "\nby " << group_by << ":\n";
                for (const auto& [key, r] : group_reports) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf), "%-24s n=%-7zu accuracy=%.3f macro_f1=%.3f\n",
                                  key.c_str(), group_sizes.at(key), r.accuracy, r.macro_f1);
                    std::cout << buf;
                }
            }
        }
    } else {
        if (format == "json") {
            std::cout << mgtd::comparison_json(comparison).dump(2) << "\n";
        } else {
            std::cout << mgtd::comparison_text(comparison);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine-generated text detection: TF-IDF + readability features, "
                 "three classical classifiers, majority voting"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file (flags override)");

    // featurize
    auto* featurize = app.add_subcommand("featurize", "Dump readability stats as CSV");
    std::string fz_input, fz_out, fz_task = "a-mono";
    featurize->add_option("--input", fz_input, "Input JSONL")->required();
    featurize->add_option("--out", fz_out, "Output CSV (default stdout)");
    add_task_option(featurize, fz_task);

    // train
    auto* train = app.add_subcommand("train", "Fit vocabulary and train a classifier");
    TrainOptions topt;
    PipelineOptions train_pipeline;
    add_task_option(train, topt.task);
    train->add_option("--model", topt.model, "logreg, nb, or gbdt (alias xgboost)")->required();
    train->add_option("--train", topt.train_path, "Labeled training JSONL")->required();
    train->add_option("--out", topt.out_dir, "Output directory for vocab.json and model.json")
        ->required();
    train->add_option("--seed", topt.seed, "Run seed, recorded in the model file")
        ->default_val(0);
    train->add_option("--threads", topt.threads, "Worker threads")->default_val(1);
    train->add_option("--max-features", topt.vectorizer.max_features, "Vocabulary cap")
        ->default_val(8000);
    train->add_option("--ngram-min", topt.vectorizer.ngram_min, "Smallest n-gram")->default_val(1);
    train->add_option("--ngram-max", topt.vectorizer.ngram_max, "Largest n-gram")->default_val(3);
    train->add_option("--min-df", topt.vectorizer.min_df, "Minimum document frequency")
        ->default_val(10);
    train->add_option("--lr", topt.logreg.learning_rate, "logreg: learning rate")
        ->default_val(0.1);
    train->add_option("--epochs", topt.logreg.epochs, "logreg: max epochs")->default_val(200);
    train->add_option("--l2", topt.logreg.l2, "logreg: L2 strength")->default_val(1e-4);
    train->add_option("--tol", topt.logreg.tol, "logreg: stop when loss improves less")
        ->default_val(1e-6);
    train->add_option("--alpha", topt.nb_alpha, "nb: smoothing")->default_val(1.0);
    train->add_option("--rounds", topt.gbdt.rounds, "gbdt: boosting rounds")->default_val(100);
    train->add_option("--max-depth", topt.gbdt.max_depth, "gbdt: tree depth")->default_val(6);
    train->add_option("--eta", topt.gbdt.eta, "gbdt: shrinkage")->default_val(0.3);
    train->add_option("--lambda", topt.gbdt.lambda, "gbdt: L2 on leaf weights")->default_val(1.0);
    train->add_option("--gamma", topt.gbdt.gamma, "gbdt: min split gain")->default_val(0.0);
    train->add_option("--min-child-weight", topt.gbdt.min_child_weight,
                      "gbdt: min hessian per child")
        ->default_val(1.0);
    train_pipeline.register_flags(train);

    // predict
    auto* predict = app.add_subcommand("predict", "Predict labels for a JSONL file");
    std::string pr_model, pr_vocab, pr_input, pr_out;
    bool pr_proba = false;
    unsigned pr_threads = 1;
    PipelineOptions predict_pipeline;
    predict->add_option("--model", pr_model, "model.json")->required();
    predict->add_option("--vocab", pr_vocab, "vocab.json")->required();
    predict->add_option("--input", pr_input, "Input JSONL")->required();
    predict->add_option("--out", pr_out, "Output JSONL (default stdout)");
    predict->add_flag("--proba", pr_proba, "Include class probabilities");
    predict->add_option("--threads", pr_threads, "Worker threads")->default_val(1);
    predict_pipeline.register_flags(predict);

    // vote
    auto* vote = app.add_subcommand("vote", "Majority-vote prediction files");
    std::vector<std::string> vt_files;
    std::string vt_task = "a-mono", vt_policy = "lowest-class", vt_out, vt_report;
    vote->add_option("files", vt_files, "Prediction JSONL files")->required()->expected(-1);
    add_task_option(vote, vt_task);
    vote->add_option("--tie-policy", vt_policy, "lowest-class or first-classifier")
        ->default_val("lowest-class");
    vote->add_option("--out", vt_out, "Voted JSONL (default stdout)");
    vote->add_option("--report", vt_report, "Vote histogram JSONL");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold labels");
    std::vector<std::string> ev_preds;
    std::string ev_gold, ev_task = "a-mono", ev_format = "text", ev_group;
    evaluate->add_option("predictions", ev_preds, "Prediction files, optionally name=path")
        ->required()
        ->expected(-1);
    evaluate->add_option("--gold", ev_gold, "Labeled gold JSONL")->required();
    add_task_option(evaluate, ev_task);
    evaluate->add_option("--format", ev_format, "text or json")->default_val("text");
    evaluate->add_option("--group-by", ev_group, "Per-group breakdown: model or source");

    try {
        app.parse(argc, argv);
        if (featurize->parsed()) return cmd_featurize(fz_input, fz_out, fz_task);
        if (train->parsed()) return cmd_train(topt, train_pipeline);
        if (predict->parsed()) {
            return cmd_predict(pr_model, pr_vocab, pr_input, pr_out, pr_proba, pr_threads,
                               predict_pipeline);
        }
        if (vote->parsed()) return cmd_vote(vt_files, vt_task, vt_policy, vt_out, vt_report);
        if (evaluate->parsed()) return cmd_evaluate(ev_preds, ev_gold, ev_task, ev_format, ev_group);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const mgtd::io_error& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 2;
    } catch (const mgtd::artifact_error& e) {
        std::cerr << "error: artifact: " << e.what() << "\n";
        return 3;
    } catch (const mgtd::input_error& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 4;
    } catch (const mgtd::train_error& e) {
        std::cerr << "error: train: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
