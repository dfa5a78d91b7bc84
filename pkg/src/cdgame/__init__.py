"""Exact solver and verification harness for the connected domination game."""

from .engine import GameConfig, GameState, Player, Status, Variant
from .graph import Graph
from .solver import NEVER, SolveReport, game_value, solve, solve_naive

__all__ = [
    "Graph", "GameConfig", "GameState", "Player", "Status", "Variant",
    "NEVER", "SolveReport", "game_value", "solve", "solve_naive",
]

__version__ = "0.1.0"
