# Permite rodar "pytest" na raiz sem instalar o pacote (mesmo truque do src/__main__.py)
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)
