#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "wlev/distance.hpp"
#include "wlev/error.hpp"
#include "wlev/error_model.hpp"
#include "wlev/eval.hpp"
#include "wlev/lexicon.hpp"
#include "wlev/model_io.hpp"
#include "wlev/trainer.hpp"

namespace wlev::cli {

namespace {

std::string fixed4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

const std::map<std::string, BorderMode> kModes{{"paper", BorderMode::Paper}, {"complement", BorderMode::Complement}};
const std::map<std::string, NormalizationMode> kNorms{{"grand", NormalizationMode::GrandTotal},
                                                      {"category", NormalizationMode::PerCategory}};

struct DistanceArgs {
    std::string x;
    std::string y;
    std::string model_path;
    BorderMode mode = BorderMode::Paper;
    bool matrix = false;
};

struct TrainArgs {
    std::string corpus_path;
    std::string out_path;
    NormalizationMode norm = NormalizationMode::GrandTotal;
    std::optional<double> smooth;
    bool nfc = false;
    unsigned threads = 1;
};

struct CorrectArgs {
    std::string dict_path;
    std::string model_path;
    BorderMode mode = BorderMode::Paper;
    std::size_t k = 10;
    std::size_t threshold = 2;
    bool nfc = false;
};

struct EvaluateArgs {
    std::string dict_path;
    std::string model_path;
    BorderMode mode = BorderMode::Paper;
    std::size_t k = 10;
    std::size_t threshold = 2;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t errors_per_word = 1;
    bool uniform_fallback = false;
    std::vector<std::size_t> mix;
    std::string json_path;
    std::string text_path;
    std::string corpus_out;
    unsigned threads = 1;
    bool nfc = false;
};

void print_matrix(std::ostream& out, const DpMatrix& m, bool integral) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << '\t';
            if (integral) {
                out << static_cast<long long>(m(i, j));
            } else {
                out << fixed4(m(i, j));
            }
        }
        out << '\n';
    }
}

DictionaryReadResult open_dictionary(const std::string& path, bool nfc, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dictionary " + path);
    auto dict = read_dictionary(in, nfc);
    for (const LineError& e : dict.errors) err << path << ':' << e.line << ": " << e.message << '\n';
    return dict;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw Error("cannot write " + path);
}

int cmd_distance(const DistanceArgs& a, std::ostream& out) {
    const Word x = decode_utf8(a.x);
    const Word y = decode_utf8(a.y);
    out << "classic\t" << levenshtein(x, y) << '\n';
    std::optional<ErrorModel> model;
    if (!a.model_path.empty()) {
        model = load_model(a.model_path);
        out << "weighted\t" << fixed4(adjusted_measure(x, y, *model, a.mode)) << '\n';
    }
    if (a.matrix) {
        out << "\nclassic matrix\n";
        print_matrix(out, levenshtein_matrix(x, y), true);
        if (model) {
            out << "\nweighted matrix\n";
            print_matrix(out, adjusted_matrix(x, y, *model, a.mode), false);
        }
    }
    return 0;
}

int cmd_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream in(a.corpus_path, std::ios::binary);
    if (!in) throw Error("cannot open corpus " + a.corpus_path);
    const CorpusReadResult corpus = read_corpus(in, a.nfc);
    for (const LineError& e : corpus.errors) err << a.corpus_path << ':' << e.line << ": " << e.message << '\n';
    if (corpus.pairs.empty()) {
        err << "error: corpus " << a.corpus_path << " contains no training pairs\n";
        return 1;
    }
    const IngestResult ingested = ingest(corpus.pairs, a.threads);
    ErrorCounts counts = ingested.counts;
    if (a.smooth) {
        std::set<Symbol> alphabet;
        for (const TrainingPair& p : corpus.pairs) {
            alphabet.insert(p.erroneous.begin(), p.erroneous.end());
            alphabet.insert(p.correct.begin(), p.correct.end());
        }
        counts = smooth(counts, *a.smooth, alphabet);
    }
    const auto count_text = [](double n) {
        std::ostringstream os;
        os << n;
        return os.str();
    };
    out << "operation\terrors\n";
    out << "insertion\t" << count_text(ingested.counts.insert_total()) << '\n';
    out << "deletion\t" << count_text(ingested.counts.delete_total()) << '\n';
    out << "substitution\t" << count_text(ingested.counts.substitute_total()) << '\n';
    out << "total\t" << count_text(ingested.counts.grand_total()) << '\n';
    out << "pairs\t" << ingested.pairs_used << '\n';
    if (counts.grand_total() == 0.0) {
        err << "error: corpus contains no editing errors; nothing to estimate\n";
        return 1;
    }
    ErrorModel model;
    try {
        model = from_counts(counts, a.norm);
    } catch (const InvalidModel& e) {
        err << "error: " << e.what() << " (a key that owns its whole denominator needs --smooth)\n";
        return 1;
    }
    save_model(model, a.out_path);
    return 0;
}

int cmd_correct(const CorrectArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const ErrorModel model = load_model(a.model_path);
    const auto dict = open_dictionary(a.dict_path, a.nfc, err);
    const SuggestOptions options{a.mode, a.k, a.threshold};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        Word query;
        try {
            query = to_word(std::string_view(line).substr(first, last - first + 1), a.nfc);
        } catch (const ParseError& e) {
            err << "skipping input: " << e.what() << '\n';
            continue;
        }
        const auto suggestions = suggest(dict.lexicon, query, model, options);
        if (suggestions.empty()) out << "no-candidates\n";
        for (const Suggestion& s : suggestions) {
            out << encode_utf8(s.word) << '\t' << fixed4(s.weighted_score) << '\t' << s.classic_distance << '\n';
        }
        out << '\n';
    }
    return 0;
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
    const ErrorModel model = load_model(a.model_path);
    const auto dict = open_dictionary(a.dict_path, a.nfc, err);
    std::vector<TrainingPair> pairs;
    if (!a.mix.empty()) {
        pairs = synth_fixed_mix(dict.lexicon, OpMix{a.mix[0], a.mix[1], a.mix[2]}, a.seed);
    } else {
        SynthSpec spec;
        spec.model = model;
        spec.errors_per_word = a.errors_per_word;
        spec.seed = a.seed;
        spec.trials = a.trials;
        spec.uniform_fallback = a.uniform_fallback;
        pairs = synth_errors(dict.lexicon, spec, a.threads);
    }
    if (!a.corpus_out.empty()) {
        std::string corpus;
        for (const TrainingPair& p : pairs) corpus += encode_utf8(p.erroneous) + '\t' + encode_utf8(p.correct) + '\n';
        write_file(a.corpus_out, corpus);
    }
    const RankReport report = compare_rankers(dict.lexicon, pairs, model, {a.mode, a.k, a.threshold, a.threads});
    const std::string text = report.to_text();
    out << text;
    if (!a.text_path.empty()) write_file(a.text_path, text);
    if (!a.json_path.empty()) write_file(a.json_path, report.to_json());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Levenshtein spelling correction toolkit"};
    app.name("wlev");
    app.require_subcommand(1, 1);

    DistanceArgs dist;
    auto* distance = app.add_subcommand("distance", "Classic distance, and the weighted measure with --model");
    distance->add_option("erroneous", dist.x, "Erroneous word (row axis)")->required();
    distance->add_option("dictionary", dist.y, "Dictionary word (column axis)")->required();
    distance->add_option("--model", dist.model_path, "Error model JSON")->check(CLI::ExistingFile);
    distance->add_option("--mode", dist.mode, "Border initialization")->transform(CLI::CheckedTransformer(kModes));
    distance->add_flag("--matrix", dist.matrix, "Print the full DP grid");

    TrainArgs train;
    auto* train_cmd = app.add_subcommand("train", "Estimate an error model from erroneous<TAB>correct pairs");
    train_cmd->add_option("corpus", train.corpus_path, "Training corpus")->required()->check(CLI::ExistingFile);
    train_cmd->add_option("-o,--out", train.out_path, "Output model path")->required();
    train_cmd->add_option("--norm", train.norm, "Frequency denominator")->transform(CLI::CheckedTransformer(kNorms));
    train_cmd->add_option("--smooth", train.smooth, "Add-k smoothing constant")->check(CLI::PositiveNumber);
    train_cmd->add_flag("--nfc", train.nfc, "NFC-normalize words on input");
    train_cmd->add_option("--threads", train.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    CorrectArgs corr;
    auto* correct = app.add_subcommand("correct", "Rank dictionary suggestions for words read from stdin");
    correct->add_option("dictionary", corr.dict_path, "Dictionary, one word per line")->required()->check(CLI::ExistingFile);
    correct->add_option("--model", corr.model_path, "Error model JSON")->required()->check(CLI::ExistingFile);
    correct->add_option("--mode", corr.mode, "Border initialization")->transform(CLI::CheckedTransformer(kModes));
    correct->add_option("--k", corr.k, "Suggestions per word")->check(CLI::PositiveNumber);
    correct->add_option("--threshold", corr.threshold, "Classic edit distance for candidate generation")
        ->check(CLI::PositiveNumber);
    correct->add_flag("--nfc", corr.nfc, "NFC-normalize words on input");

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "Compare weighted and classic ranking on synthetic typos");
    evaluate->add_option("dictionary", ev.dict_path, "Dictionary, one word per line")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--model", ev.model_path, "Error model JSON (sampling and ranking)")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--mode", ev.mode, "Border initialization")->transform(CLI::CheckedTransformer(kModes));
    evaluate->add_option("--k", ev.k, "Deepest reported position")->check(CLI::PositiveNumber);
    evaluate->add_option("--threshold", ev.threshold, "Classic edit distance for candidate generation")
        ->check(CLI::PositiveNumber);
    auto* trials_opt = evaluate->add_option("--trials", ev.trials, "Number of synthetic typos")->check(CLI::PositiveNumber);
    evaluate->add_option("--seed", ev.seed, "Master seed");
    evaluate->add_option("--errors-per-word", ev.errors_per_word, "Operations applied per typo");
    evaluate->add_flag("--uniform-fallback", ev.uniform_fallback, "Sample uniformly if the model is all zero");
    auto* mix_opt = evaluate->add_option("--mix", ev.mix, "Exact INS,DEL,SUB single-error counts instead of sampling")
                        ->delimiter(',')
                        ->expected(3);
    trials_opt->excludes(mix_opt);
    evaluate->add_option("--json", ev.json_path, "Write the JSON report here");
    evaluate->add_option("--text", ev.text_path, "Write the text report here");
    evaluate->add_option("--write-corpus", ev.corpus_out, "Write the synthesized pairs as a training corpus");
    evaluate->add_option("--threads", ev.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    evaluate->add_flag("--nfc", ev.nfc, "NFC-normalize dictionary words");

    std::vector<const char*> argv{"wlev"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (evaluate->parsed() && ev.mix.empty() && ev.trials == 0) {
            throw CLI::ValidationError("--trials", "--trials >= 1 or --mix is required");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (distance->parsed()) return cmd_distance(dist, out);
        if (train_cmd->parsed()) return cmd_train(train, out, err);
        if (correct->parsed()) return cmd_correct(corr, in, out, err);
        if (evaluate->parsed()) return cmd_evaluate(ev, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace wlev::cli
