#pragma once

#include "lwg/buckets.hpp"
#include "lwg/chrf.hpp"
#include "lwg/chunking.hpp"
#include "lwg/corpus_io.hpp"
#include "lwg/default_rules.hpp"
#include "lwg/embedding.hpp"
#include "lwg/error.hpp"
#include "lwg/external_scores.hpp"
#include "lwg/grouped_io.hpp"
#include "lwg/grouping.hpp"
#include "lwg/parallel.hpp"
#include "lwg/perturbation.hpp"
#include "lwg/prompt.hpp"
#include "lwg/random.hpp"
#include "lwg/rules.hpp"
#include "lwg/similarity.hpp"
#include "lwg/text.hpp"
