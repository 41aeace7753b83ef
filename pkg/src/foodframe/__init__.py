"""foodframe: framing analysis toolkit for restaurant review corpora."""

__version__ = "0.1.0"

from .census import CensusTable, HiLoCode, code_hi_lo, link_neighborhood, simpson_diversity
from .extract import (
    AnchorSet,
    FramingFeature,
    extract_adjectives,
    extract_review,
    in_negation_scope,
    load_anchor_sets,
    load_dish_names,
    resolve_anchor_mentions,
)
from .ingest import (
    Business,
    BusinessTable,
    CuisineRegionMap,
    FilterConfig,
    Review,
    ReviewTable,
    exclude_nonlocal,
    load_businesses,
    load_reviews,
)
from .lexicons import FrameLexicon, FramingScore, load_lexicons, match_entry, score_review
from .logodds import CountTable, LogOddsEntry, frame_filtered_log_odds, top_associated, weighted_log_odds
from .parses import Mention, ParsedReview, Token, children, read_conllu, to_conllu
from .regression import (
    Categorical,
    Continuous,
    RegressionResult,
    RegressionSpec,
    StudyConfig,
    build_design_matrix,
    fit_ols,
    run_study,
    vif,
    wald_compare,
)
