"""Food-review search and analytics engine.

Three pipelines over one review corpus: five-class sentiment classification,
adjective-noun opinion tag extraction, and BM25 retrieval re-ranked by a
pairwise-trained scoring network. Exposed through a CLI (`plateful`) and an
HTTP JSON API.
"""

__version__ = "0.1.0"
