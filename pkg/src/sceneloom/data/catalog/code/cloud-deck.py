"""Cloud Deck generator (Weather)."""

PARAMS = {
    "size": 2.264,
    "detail": 2,
    "roughness": 0.542,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cloud Deck"
    for key, value in params.items():
        node[key] = value
    return node
