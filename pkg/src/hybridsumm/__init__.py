"""Hybrid extractive summarization: statistical and semantic rankers combined by a weighted ensemble."""

from .config import PipelineConfig, load_config
from .datasets import mini_corpus
from .ensemble import CorpusProfile, ModelWeights, TrainingExample, consensus_summary, cweight, train_weights
from .estimators import HybridSummarizer, SentenceRanker
from .evaluate import RougeScore, rouge_n
from .exceptions import DataError, FormatError, HybridSummError, ResourceError
from .lexicon import Lexicon, SentenceEmbeddingStore, WordVectorTable, load_lexicon, load_sentence_embeddings, load_vectors
from .pipeline import Pipeline, Resources
from .preprocess import Document, Sentence, Token, preprocess_document
from .ranking import Budget, Summary, hierarchical_cluster_rank, relevance_scores, select_summary
from .semmodels import embedding_similarity_matrix, glove_similarity_matrix, wordnet_similarity_matrix
from .statmodels import similarity_matrix, textrank, tfidf_matrix, tfidf_sentence_scores

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CorpusProfile",
    "DataError",
    "Document",
    "FormatError",
    "HybridSummError",
    "HybridSummarizer",
    "Lexicon",
    "ModelWeights",
    "Pipeline",
    "PipelineConfig",
    "ResourceError",
    "Resources",
    "RougeScore",
    "Sentence",
    "SentenceEmbeddingStore",
    "SentenceRanker",
    "Summary",
    "Token",
    "TrainingExample",
    "WordVectorTable",
    "consensus_summary",
    "cweight",
    "embedding_similarity_matrix",
    "glove_similarity_matrix",
    "hierarchical_cluster_rank",
    "load_config",
    "load_lexicon",
    "load_sentence_embeddings",
    "load_vectors",
    "mini_corpus",
    "preprocess_document",
    "relevance_scores",
    "rouge_n",
    "select_summary",
    "similarity_matrix",
    "textrank",
    "tfidf_matrix",
    "tfidf_sentence_scores",
    "train_weights",
    "wordnet_similarity_matrix",
]
