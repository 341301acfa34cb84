#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrx/features.hpp"
#include "lrx/matrix.hpp"

namespace lrx {

// One TDNN layer: which frame offsets it sees, per-frame input width n,
// output width m, and an optional factorization rank k (0 = full rank).
struct LayerSpec {
  std::vector<int> context;
  int in_dim = 0;
  int out_dim = 0;
  int rank = 0;

  int num_taps() const { return int(context.size()); }
  int fan_in() const { return num_taps() * in_dim; }
  int span() const { return context.back() - context.front(); }
};

struct ModelConfig {
  std::vector<LayerSpec> tdnn;  // five layers
  int embed_dim = 256;
  int num_speakers = 0;
  double width_factor = 1.0;

  int pooled_dim() const { return 2 * tdnn.back().out_dim; }

  // Five-layer topology with contexts [t-2..t+2], {t-2,t,t+2}, {t-2,t,t+2},
  // {t}, {t}, hidden width 512, 40-dim input, 256-dim embedding.
  static ModelConfig table1(int num_speakers);
};

void validate_config(const ModelConfig& cfg);

// Scales hidden layer widths 1-5 by `factor`, rounding to the nearest
// multiple of 8. Ranks scale with their layer's input width; embedding and
// speaker counts are unchanged.
ModelConfig scale_config(const ModelConfig& cfg, double factor);

// Applies ranks to layers 2-5. A value <= 1.0 is a ratio of the layer's
// input width; anything larger is an absolute rank. Rank bounds: 1 < k <= n.
ModelConfig with_ranks(const ModelConfig& cfg,
                       const std::map<int, double>& ranks);

struct ParamCounts {
  std::vector<std::pair<std::string, long long>> per_layer;
  long long total = 0;

  long long layer(const std::string& name) const;
};

// Full layer: c*n*m. Low-rank layer: c*n*k + k*m. Plus segment and output.
ParamCounts count_params(const ModelConfig& cfg);

// Trainable matrices of one TDNN layer. Full layers store the transposed
// weight (m x c*n) so each output row is a dot product with the stacked
// input; factorized layers store the pair (c*n x k, k x m).
struct TdnnWeights {
  Matrix full;
  Matrix a;
  Matrix b;

  bool low_rank() const { return full.empty(); }
};

struct WeightSet {
  std::vector<TdnnWeights> tdnn;
  Matrix segment;  // embed_dim x pooled_dim
  Matrix output;   // num_speakers x embed_dim (one row per speaker)
};

using Embedding = std::vector<double>;

WeightSet init_weights(const ModelConfig& cfg, uint64_t seed);
WeightSet zero_weights(const ModelConfig& cfg);
long long num_weights(const WeightSet& w);

// Stacks context frames: output row t holds input rows t + (offset - min)
// for each tap, concatenated in context order.
Matrix concat_context(const LayerSpec& spec, const Matrix& input);

// Adjoint of concat_context: scatter-adds column blocks back onto frames.
Matrix scatter_context(const LayerSpec& spec, const Matrix& dxcat,
                       std::size_t input_frames);

// Per-layer concatenate-context affine map plus ReLU; no bias anywhere.
// Output has input_frames - span rows.
Matrix forward_tdnn(const LayerSpec& spec, const TdnnWeights& w,
                    const Matrix& input);

// Concatenation of per-dimension mean and population standard deviation
// (floored at 1e-10) over all frames.
std::vector<double> stats_pool(const Matrix& seq);

// Full utterance to a single embedding: layers 1-5, stats pooling, then the
// pre-activation segment affine map. The output layer is training-only.
Embedding embed(const ModelConfig& cfg, const WeightSet& w,
                const FeatureSequence& feats);

// Fewest input frames that leave at least two frames for pooling.
int min_input_frames(const ModelConfig& cfg);

// Weight file: "LRXW", u32 version, serialized config, then per-layer
// little-endian float64 blobs in declaration order.
void save_model(const std::string& path, const ModelConfig& cfg,
                const WeightSet& w);
std::pair<ModelConfig, WeightSet> load_model(const std::string& path);

std::string config_digest(const ModelConfig& cfg);

// Flat key=value config file (layerN.context / layerN.out_dim /
// layerN.rank / embed_dim / num_speakers / width_factor).
ModelConfig read_config_file(const std::string& path);
void write_config_file(const std::string& path, const ModelConfig& cfg);

}  // namespace lrx
