"""
Cache disque des verdicts de factorisation entière
"""
import hashlib
import json
import logging
import os
from typing import Dict, Optional

logger = logging.getLogger(__name__)


class FactorizationCache:
    """Stocke les verdicts décidés sous forme de fichiers JSON, un par entier"""

    def __init__(self, directory: str):
        """
        Initialise le cache

        Args:
            directory: Répertoire de stockage (créé si nécessaire)
        """
        self.directory = directory
        self._init_directory()

    def _init_directory(self):
        """Crée le répertoire de stockage"""
        try:
            os.makedirs(self.directory, exist_ok=True)
        except Exception as e:
            logger.error("❌ Erreur lors de l'initialisation du cache : %s", e)

    def _path(self, n: int) -> str:
        digest = hashlib.sha256(str(abs(n)).encode('ascii')).hexdigest()
        return os.path.join(self.directory, f"{digest}.json")

    def get(self, n: int) -> Optional[Dict]:
        """
        Récupère un verdict stocké

        Args:
            n: Entier dont on cherche la factorisation

        Returns:
            Dictionnaire {'n', 'factors', 'cofactors', 'squarefree'} ou None
        """
        path = self._path(n)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r', encoding='utf-8') as fh:
                entry = json.load(fh)
            if int(entry['n']) != abs(n):
                return None
            return entry
        except Exception as e:
            logger.error("❌ Erreur lors de la lecture du cache : %s", e)
            return None

    def insert(self, n: int, entry: Dict) -> bool:
        """
        Enregistre un verdict

        Args:
            n: Entier factorisé
            entry: Verdict sérialisable

        Returns:
            True si l'écriture a réussi, False sinon
        """
        try:
            payload = dict(entry, n=str(abs(n)))
            tmp = self._path(n) + ".tmp"
            with open(tmp, 'w', encoding='utf-8') as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, self._path(n))
            return True
        except Exception as e:
            logger.error("❌ Erreur lors de l'écriture dans le cache : %s", e)
            return False

    def clear(self) -> int:
        """
        Vide le cache

        Returns:
            Nombre de fichiers supprimés
        """
        removed = 0
        try:
            for name in os.listdir(self.directory):
                if name.endswith('.json'):
                    os.remove(os.path.join(self.directory, name))
                    removed += 1
        except Exception as e:
            logger.error("❌ Erreur lors de la suppression du cache : %s", e)
        return removed
