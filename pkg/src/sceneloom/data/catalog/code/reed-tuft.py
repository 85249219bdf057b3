"""Reed Tuft generator (Plants)."""

PARAMS = {
    "size": 1.894,
    "detail": 3,
    "roughness": 0.665,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Reed Tuft"
    for key, value in params.items():
        node[key] = value
    return node
