from diffseq.cli import main

raise SystemExit(main())
