from tsvha.main import main

main()
