"""
Caché en disco de polinomios Psi_n certificados.

Cada entrada es un JSON ``<clave>.json`` con la tupla, el nivel, el grado
máximo de la búsqueda y el texto del polinomio; ``metadata.json`` indexa las
entradas con su último uso. La caché no certifica nada: quien lee (find_psi)
vuelve a comprobar el polinomio y llama a invalidate si no pasa.
"""

import hashlib
import json
import os
import time
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional

from ..utils.logging import get_logger

logger = get_logger("identities.cache")

TupleCoeffs = List[List[int]]


class PsiKey(NamedTuple):
    """Lo que identifica una búsqueda de Psi_n (la semilla no cambia el resultado)."""

    tuple_coeffs: TupleCoeffs
    n: int
    cap: int

    def digest(self) -> str:
        payload = {"tuple": self.tuple_coeffs, "n": self.n, "cap": self.cap}
        canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


class PsiCache:
    """
    Caché de Psi_n con expulsión del menos usado recientemente.

    Los errores de E/S se registran como WARNING y la caché sigue funcionando
    como si la entrada no existiera.
    """

    def __init__(self, cache_dir: str = ".vinoslice_cache", max_entries: int = 1000):
        """
        Args:
            cache_dir: Directorio de la caché (se crea si no existe)
            max_entries: Número máximo de entradas antes de expulsar
        """
        self.cache_dir = Path(cache_dir)
        self.max_entries = max_entries
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.index_file = self.cache_dir / "metadata.json"
        self.metadata: Dict[str, Dict[str, Any]] = self._read_json(self.index_file) or {}

    def _entry_file(self, digest: str) -> Path:
        return self.cache_dir / f"{digest}.json"

    @staticmethod
    def _read_json(path: Path) -> Optional[Dict[str, Any]]:
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            logger.warning(f"No se pudo leer {path.name} de la caché: {e}")
            return None
        return data if isinstance(data, dict) else None

    def _write_json(self, path: Path, data: Dict[str, Any]) -> bool:
        tmp = path.with_suffix(".tmp")
        try:
            tmp.write_text(json.dumps(data, sort_keys=True), encoding="utf-8")
            os.replace(tmp, path)
        except OSError as e:
            logger.warning(f"No se pudo escribir {path.name} en la caché: {e}")
            return False
        return True

    def _drop(self, digest: str) -> None:
        self.metadata.pop(digest, None)
        try:
            self._entry_file(digest).unlink(missing_ok=True)
        except OSError as e:
            logger.warning(f"No se pudo borrar la entrada {digest[:12]}: {e}")

    def get(self, tuple_coeffs: TupleCoeffs, n: int, cap: int) -> Optional[str]:
        """
        Texto de Psi_n guardado para esta búsqueda.

        Returns:
            Optional[str]: Polinomio en forma textual, o None si no hay entrada
            válida
        """
        key = PsiKey(tuple_coeffs, n, cap)
        digest = key.digest()
        if digest not in self.metadata:
            return None

        entry = self._read_json(self._entry_file(digest)) or {}
        stored = PsiKey(entry.get("tuple"), entry.get("n"), entry.get("cap"))
        if "psi" not in entry or stored != key:
            logger.debug(f"Entrada {digest[:12]} ausente o ajena; se descarta")
            self._drop(digest)
            self._write_json(self.index_file, self.metadata)
            return None

        self.metadata[digest]["used"] = time.time()
        self._write_json(self.index_file, self.metadata)
        return str(entry["psi"])

    def set(
        self, tuple_coeffs: TupleCoeffs, n: int, cap: int, psi_text: str, degree: int
    ) -> None:
        """
        Guarda un Psi_n certificado.

        Args:
            tuple_coeffs: Coeficientes ascendentes de cada f_j
            n: Nivel
            cap: Grado máximo de la búsqueda
            psi_text: Polinomio en forma textual
            degree: Grado total de Psi_n
        """
        key = PsiKey(tuple_coeffs, n, cap)
        digest = key.digest()
        entry = {"tuple": tuple_coeffs, "n": n, "cap": cap, "psi": psi_text, "degree": degree}
        if not self._write_json(self._entry_file(digest), entry):
            return

        now = time.time()
        self.metadata[digest] = {"n": n, "degree": degree, "created": now, "used": now}
        self._evict()
        self._write_json(self.index_file, self.metadata)

    def invalidate(self, tuple_coeffs: TupleCoeffs, n: int, cap: int) -> None:
        """Borra la entrada de una búsqueda concreta."""
        self._drop(PsiKey(tuple_coeffs, n, cap).digest())
        self._write_json(self.index_file, self.metadata)

    def _evict(self) -> None:
        excess = len(self.metadata) - self.max_entries
        if excess <= 0:
            return
        by_use = sorted(self.metadata, key=lambda d: self.metadata[d].get("used", 0.0))
        for digest in by_use[:excess]:
            self._drop(digest)
        logger.debug(f"Expulsadas {excess} entradas de la caché de Psi")

    def clear(self) -> None:
        """Vacía la caché."""
        for digest in list(self.metadata):
            self._drop(digest)
        self._write_json(self.index_file, self.metadata)
        logger.info(f"Caché de Psi vaciada ({self.cache_dir})")

    def __len__(self) -> int:
        return len(self.metadata)
