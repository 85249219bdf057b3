"""LLM-assisted procedural scene generation toolkit.

Subsystems: scene-description condensation (:mod:`sceneloom.usda`), lexical
retrieval databases (:mod:`sceneloom.retrieval`), generator command grammar
(:mod:`sceneloom.grammar`), prompt assembly and staged-reasoning parsing
(:mod:`sceneloom.prompts`), chat-model clients with replay fixtures
(:mod:`sceneloom.llm`), the procedural asset catalog (:mod:`sceneloom.catalog`),
node-graph transpilation (:mod:`sceneloom.nodegraph`), the human-in-the-loop
session state machine and HTTP API (:mod:`sceneloom.session`,
:mod:`sceneloom.server`), and the executable-rate evaluation harness
(:mod:`sceneloom.evalharness`).
"""

__version__ = "0.1.0"
