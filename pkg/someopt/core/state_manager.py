"""Persistence of run results for later re-analysis."""

import json
from pathlib import Path
from typing import Dict, List, Optional

from utils import get_logger

from .coordinator import RunResult

logger = get_logger("state_manager")


class RunStore:
    """Stores the runs of every (problem, algorithm) pair as JSON files."""

    def __init__(self, root: str = "results/runs"):
        """Initialize the store.

        Args:
            root: Directory holding one subdirectory per problem
        """
        self.root = Path(root)

    def path_for(self, problem: str, algorithm: str) -> Path:
        return self.root / problem / f"{algorithm}.json"

    def save(self, problem: str, algorithm: str, results: List[RunResult]) -> Path:
        """Save a batch of runs, replacing any earlier file for the pair.

        Args:
            problem: Problem id
            algorithm: Algorithm id
            results: Runs in run-index order

        Returns:
            Path written
        """
        path = self.path_for(problem, algorithm)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            'problem': problem,
            'algorithm': algorithm,
            'runs': [result.to_dict() for result in results]
        }
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(payload, f, indent=2)
        logger.debug(f"Saved {len(results)} runs for {problem}/{algorithm}")
        return path

    def load(self, problem: str, algorithm: str) -> Optional[List[RunResult]]:
        """Load a batch of runs, or None if the pair was never stored."""
        path = self.path_for(problem, algorithm)
        if not path.exists():
            return None
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        return [RunResult.from_dict(run) for run in data['runs']]

    def load_all(self) -> Dict[str, Dict[str, List[RunResult]]]:
        """Every stored batch as problem -> algorithm -> runs, in sorted path order."""
        stored: Dict[str, Dict[str, List[RunResult]]] = {}
        if not self.root.exists():
            return stored
        for path in sorted(self.root.glob("*/*.json")):
            runs = self.load(path.parent.name, path.stem)
            if runs:
                stored.setdefault(path.parent.name, {})[path.stem] = runs
        logger.info(f"Loaded {sum(len(a) for a in stored.values())} stored batches from {self.root}")
        return stored
