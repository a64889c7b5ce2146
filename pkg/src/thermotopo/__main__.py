from thermotopo.cli import app

app()
