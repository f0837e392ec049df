#pragma once

// Umbrella header.

#include "kmtext/corpus.hpp"
#include "kmtext/error.hpp"
#include "kmtext/insight.hpp"
#include "kmtext/knowledge.hpp"
#include "kmtext/lda.hpp"
#include "kmtext/naive_bayes.hpp"
#include "kmtext/porter.hpp"
#include "kmtext/retrieval.hpp"
#include "kmtext/run_config.hpp"
#include "kmtext/sentiment.hpp"
#include "kmtext/svg.hpp"
#include "kmtext/textprep.hpp"
#include "kmtext/timestamp.hpp"
#include "kmtext/vectorspace.hpp"
